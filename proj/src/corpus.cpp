#include "translit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace translit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text, std::string_view origin,
                                      const ScriptTable& table) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 4)
      throw ParseError(std::string(origin) + ":" + std::to_string(lineno) +
                           ": corpus line needs source/target/origin/lang",
                       lineno);
    CorpusEntry e;
    e.source = fields[0];
    e.target = fields[1];
    if (fields[2] != "M" && fields[2] != "W")
      throw ParseError(std::string(origin) + ":" + std::to_string(lineno) +
                           ": origin must be M or W",
                       lineno);
    e.origin = fields[2][0];
    e.lang = fields[3];
    if (fields.size() > 4 && !fields[4].empty())
      for (const auto& f : split(fields[4], ','))
        if (!f.empty()) e.flags.insert(f);
    if (!e.excluded()) {
      try {
        decompose(e.target, table);
      } catch (const UnparseableText& ex) {
        throw InvalidTarget(std::string(origin) + ":" + std::to_string(lineno) +
                                ": target for '" + e.source + "' does not decompose: " +
                                ex.what(),
                            lineno);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path, const ScriptTable& table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), path, table);
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

struct EntryResult {
  bool evaluated = false;
  bool top1 = false;
  bool topk = false;
  double syllable_fraction = 0.0;
  std::vector<std::string> top_texts;
  std::vector<std::string> rule_ids;
};

EntryResult evaluate_entry(const CorpusEntry& e, const RuleSet& rules,
                           const PinyinTable& pinyin, int k) {
  EntryResult r;
  if (e.excluded()) return r;
  r.evaluated = true;
  std::vector<Candidate> cands;
  try {
    if (e.lang == "zh") {
      auto syls = parse_pinyin(e.source, pinyin);
      cands = pinyin_to_burmese(syls, PinyinMode::Word, pinyin, k);
    } else {
      cands = transliterate(e.source, rules, k);
    }
  } catch (const std::exception& ex) {
    r.top_texts.push_back(std::string("<error: ") + ex.what() + ">");
    return r;
  }
  for (const auto& c : cands) r.top_texts.push_back(c.text);
  if (!cands.empty()) {
    r.top1 = cands[0].text == e.target;
    for (const auto& c : cands) r.topk |= c.text == e.target;
    r.rule_ids = cands[0].rule_trace;
    // per-syllable overlap of the best candidate against the target
    try {
      auto want = decompose(e.target, rules.script());
      const auto& got = cands[0].syllables;
      std::size_t m = std::max(want.size(), got.size());
      if (m == 0) {
        r.syllable_fraction = 1.0;
      } else {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i) {
          if (compose({want[i]}, rules.script()) == compose({got[i]}, rules.script())) ++hits;
        }
        r.syllable_fraction = double(hits) / double(m);
      }
    } catch (const std::exception&) {
      r.syllable_fraction = 0.0;
    }
  }
  return r;
}

Report reduce(const std::vector<CorpusEntry>& corpus, const std::vector<EntryResult>& results) {
  Report rep;
  rep.total = static_cast<int>(corpus.size());
  double frac_sum = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = results[i];
    if (!r.evaluated) continue;
    ++rep.evaluated;
    rep.top1_hits += r.top1 ? 1 : 0;
    rep.topk_hits += r.topk ? 1 : 0;
    frac_sum += r.syllable_fraction;
    if (!r.topk) {
      Report::Failure f;
      f.source = corpus[i].source;
      f.target = corpus[i].target;
      f.top_texts = r.top_texts;
      f.rule_ids = r.rule_ids;
      rep.failures.push_back(std::move(f));
    }
  }
  rep.syllable_accuracy = rep.evaluated ? frac_sum / rep.evaluated : 0.0;
  return rep;
}

}  // namespace

Report evaluate_serial(const std::vector<CorpusEntry>& corpus, const RuleSet& rules,
                       const PinyinTable& pinyin, int k) {
  std::vector<EntryResult> results(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    results[i] = evaluate_entry(corpus[i], rules, pinyin, k);
  return reduce(corpus, results);
}

Report evaluate(const std::vector<CorpusEntry>& corpus, const RuleSet& rules,
                const PinyinTable& pinyin, const EvalOptions& opts) {
  if (!opts.parallel) return evaluate_serial(corpus, rules, pinyin, opts.k);
  std::vector<EntryResult> results(corpus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(corpus.size()); ++i)
    results[static_cast<std::size_t>(i)] =
        evaluate_entry(corpus[static_cast<std::size_t>(i)], rules, pinyin, opts.k);
  return reduce(corpus, results);
}

// ---------------------------------------------------------------------------
// report rendering

namespace {

std::string fmt_fraction(double v, int evaluated) {
  if (!evaluated) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string Report::to_text() const {
  std::string out;
  out += "entries\t" + std::to_string(total) + "\n";
  out += "evaluated\t" + std::to_string(evaluated) + "\n";
  out += "top1\t" + fmt_fraction(top1(), evaluated) + "\n";
  out += "topk\t" + fmt_fraction(topk(), evaluated) + "\n";
  out += "syllable_accuracy\t" + fmt_fraction(syllable_accuracy, evaluated) + "\n";
  out += "failures\t" + std::to_string(failures.size()) + "\n";
  for (const auto& f : failures) {
    out += "fail\t" + f.source + "\t" + f.target + "\t";
    for (std::size_t i = 0; i < f.top_texts.size(); ++i) {
      if (i) out += ",";
      out += f.top_texts[i];
    }
    out += "\t";
    for (std::size_t i = 0; i < f.rule_ids.size(); ++i) {
      if (i) out += ",";
      out += f.rule_ids[i];
    }
    out += "\n";
  }
  return out;
}

std::string Report::to_tsv() const { return to_text(); }

}  // namespace translit
