#include "translit/pinyin.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>

#include "translit/utf8.hpp"

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

const char* kInitials[] = {"zh", "ch", "sh", "b", "p", "m", "f", "d", "t", "n", "l",
                           "g",  "k",  "h",  "j", "q", "x", "r", "z", "c", "s", "y", "w"};

bool is_apical_initial(const std::string& ini) {
  return ini == "z" || ini == "c" || ini == "s" || ini == "zh" || ini == "ch" ||
         ini == "sh" || ini == "r";
}

// diacritic -> (base letter, tone)
struct DiaMap {
  char32_t cp;
  char base;
  int tone;
};
constexpr DiaMap kDiacritics[] = {
    {0x0101, 'a', 1}, {0x00E1, 'a', 2}, {0x01CE, 'a', 3}, {0x00E0, 'a', 4},
    {0x0113, 'e', 1}, {0x00E9, 'e', 2}, {0x011B, 'e', 3}, {0x00E8, 'e', 4},
    {0x012B, 'i', 1}, {0x00ED, 'i', 2}, {0x01D0, 'i', 3}, {0x00EC, 'i', 4},
    {0x014D, 'o', 1}, {0x00F3, 'o', 2}, {0x01D2, 'o', 3}, {0x00F2, 'o', 4},
    {0x016B, 'u', 1}, {0x00FA, 'u', 2}, {0x01D4, 'u', 3}, {0x00F9, 'u', 4},
    {0x01D6, 'v', 1}, {0x01D8, 'v', 2}, {0x01DA, 'v', 3}, {0x01DC, 'v', 4},
    {0x00FC, 'v', 0},  // ü without tone
};

}  // namespace

// ---------------------------------------------------------------------------
// table loading

PinyinTable PinyinTable::parse(std::string_view text, std::string_view origin,
                               const ScriptTable& table) {
  PinyinTable t;
  t.script_ = &table;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& why) {
    throw ParseError(std::string(origin) + ":" + std::to_string(lineno) + ": " + why, lineno);
  };
  auto parse_mapping = [&](const std::vector<std::string>& fields) {
    Mapping m;
    auto outs = split(fields[2], '|');
    auto weights = fields.size() > 3 ? split(fields[3], '|') : std::vector<std::string>{"0"};
    if (weights.size() != 1 && weights.size() != outs.size())
      err("weight count does not match output count");
    for (std::size_t i = 0; i < outs.size(); ++i) {
      std::istringstream iss(outs[i]);
      std::string token;
      iss >> token;
      FragmentPiece piece;
      if (token == "+")
        piece = FragmentPiece{};  // set below
      // reuse the rule-pack fragment grammar via a tiny pack line
      RuleSet probe = RuleSet::parse(
          "default\tA@nucleus\t*\t" + outs[i] + "\t0", "<pinyin-fragment>", table);
      const auto& pieces = probe.rules()[0].outputs[0].pieces;
      if (pieces.size() != 1) err("pinyin mapping '" + outs[i] + "' must be one fragment");
      m.pieces.push_back(pieces[0]);
      m.weights.push_back(std::stoi(weights.size() == 1 ? weights[0] : weights[i]));
      m.raws.push_back(outs[i]);
    }
    return m;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    const std::string& kind = fields[0];
    if (kind == "py_syllable") {
      if (fields.size() < 2) err("py_syllable needs a spelling");
      t.valid_.insert(fields[1]);
    } else if (kind == "py_initial") {
      if (fields.size() < 3) err("py_initial needs a mapping");
      t.initials_[fields[1]] = parse_mapping(fields);
    } else if (kind == "py_final") {
      if (fields.size() < 3) err("py_final needs a mapping");
      t.finals_[fields[1]] = parse_mapping(fields);
    } else if (kind == "py_special") {
      if (fields.size() < 3) err("py_special needs a mapping");
      t.specials_[fields[1]] = parse_mapping(fields);
    } else if (kind == "py_dropped") {
      if (fields.size() < 3) err("py_dropped needs a fragment");
      auto m = parse_mapping(fields);
      t.dropped_[fields[1]] = m.pieces[0];
    } else if (kind == "py_tone") {
      if (fields.size() < 3) err("py_tone needs tone names");
      std::vector<std::pair<Tone, int>> variants;
      auto outs = split(fields[2], '|');
      auto weights = fields.size() > 3 ? split(fields[3], '|') : std::vector<std::string>{"0"};
      for (std::size_t i = 0; i < outs.size(); ++i) {
        Tone tone;
        if (outs[i] == "low")
          tone = Tone::Low;
        else if (outs[i] == "high")
          tone = Tone::High;
        else if (outs[i] == "creaky")
          tone = Tone::Creaky;
        else {
          err("unknown tone '" + outs[i] + "'");
          continue;
        }
        variants.push_back({tone, std::stoi(weights.size() == 1 ? weights[0] : weights[i])});
      }
      t.tones_[std::stoi(fields[1])] = std::move(variants);
    } else {
      err("unknown line kind '" + kind + "'");
    }
  }
  return t;
}

PinyinTable PinyinTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open pinyin table: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const PinyinTable::Mapping* PinyinTable::initial_mapping(const std::string& key) const {
  auto it = initials_.find(key);
  return it == initials_.end() ? nullptr : &it->second;
}
const PinyinTable::Mapping* PinyinTable::final_mapping(const std::string& key) const {
  auto it = finals_.find(key);
  return it == finals_.end() ? nullptr : &it->second;
}
const PinyinTable::Mapping* PinyinTable::special(const std::string& syllable) const {
  auto it = specials_.find(syllable);
  return it == specials_.end() ? nullptr : &it->second;
}
const FragmentPiece* PinyinTable::dropped_final(const std::string& key) const {
  auto it = dropped_.find(key);
  return it == dropped_.end() ? nullptr : &it->second;
}
const std::vector<std::pair<Tone, int>>* PinyinTable::tone_mapping(int tone) const {
  auto it = tones_.find(tone);
  return it == tones_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// parsing

std::vector<PinyinSyllable> parse_pinyin(std::string_view text, const PinyinTable& table) {
  // normalize: lowercase, strip diacritics into per-letter tones
  std::string letters;
  std::vector<int> letter_tone;
  std::vector<std::size_t> letter_offset;
  std::vector<bool> boundary_before;  // apostrophe-forced boundary
  bool pending_boundary = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t at = pos;
    char32_t cp = utf8::decode_at(text, pos);
    if (cp == '\'') {
      pending_boundary = true;
      continue;
    }
    if (cp >= '0' && cp <= '4' && !letters.empty()) {
      letter_tone.back() = static_cast<int>(cp - '0');
      // a digit also closes the syllable
      pending_boundary = true;
      continue;
    }
    char base = 0;
    int tone = -1;
    if (cp < 0x80 && std::isalpha(static_cast<int>(cp))) {
      base = static_cast<char>(std::tolower(static_cast<int>(cp)));
    } else {
      for (const auto& d : kDiacritics)
        if (d.cp == cp) {
          base = d.base;
          tone = d.tone;
          break;
        }
    }
    if (!base) throw InvalidPinyin("invalid character in pinyin input", at);
    letters.push_back(base);
    letter_tone.push_back(tone >= 0 ? tone : -1);
    letter_offset.push_back(at);
    boundary_before.push_back(pending_boundary);
    pending_boundary = false;
  }

  const std::size_t n = letters.size();
  std::size_t max_len = 0;
  for (const auto& s : table.valid_syllables()) max_len = std::max(max_len, s.size());

  std::vector<PinyinSyllable> out;
  std::size_t deepest_fail = 0;

  // greedy longest-match with backtracking on dead ends
  std::vector<PinyinSyllable> stack;
  std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t len = std::min(max_len, n - i); len >= 1; --len) {
      // a forced boundary may not fall inside a syllable
      bool crosses = false;
      for (std::size_t j = i + 1; j < i + len; ++j) crosses |= boundary_before[j];
      if (crosses) continue;
      std::string cand = letters.substr(i, len);
      if (!table.valid_syllables().count(cand)) continue;
      PinyinSyllable syl;
      syl.spelling = cand;
      syl.tone = 0;
      for (std::size_t j = i; j < i + len; ++j)
        if (letter_tone[j] >= 0) syl.tone = letter_tone[j];
      syl.src_begin = letter_offset[i];
      syl.src_end = (i + len < n) ? letter_offset[i + len] : text.size();
      stack.push_back(syl);
      if (match(i + len)) return true;
      stack.pop_back();
    }
    deepest_fail = std::max(deepest_fail, i);
    return false;
  };
  if (!match(0))
    throw InvalidPinyin("cannot segment pinyin input",
                        deepest_fail < n ? letter_offset[deepest_fail] : text.size());
  out = stack;

  // split each spelling into initial + final
  for (auto& s : out) {
    s.initial = "";
    for (const char* ini : kInitials) {
      std::size_t len = std::strlen(ini);
      if (s.spelling.size() > len && s.spelling.compare(0, len, ini) == 0) {
        s.initial = ini;
        break;
      }
    }
    s.final_part = s.spelling.substr(s.initial.size());
  }
  return out;
}

// ---------------------------------------------------------------------------
// mapping

namespace {

// tone application; the checked rhymes ignore tone, open creaky /a/ falls
// back to the bare inherent vowel
bool apply_tone(Rhyme& r, Tone tone, const ScriptTable& table) {
  if (r.ending == Ending::Glottal) return true;
  Rhyme probe = r;
  probe.tone = tone;
  if (probe.nucleus == Nucleus::A && probe.ending == Ending::Open && tone == Tone::Creaky) {
    probe.nucleus = Nucleus::Schwa;
    probe.tone = Tone::Low;
  }
  if (!table.rhyme_valid(probe)) return false;
  r = probe;
  return true;
}

struct SylOption {
  BurmeseSyllable syllable;
  int weight = 0;
  std::string trace;
};

}  // namespace

std::vector<Candidate> pinyin_to_burmese(const std::vector<PinyinSyllable>& syllables,
                                         PinyinMode mode, const PinyinTable& table, int k) {
  if (k < 1) k = 1;
  const ScriptTable& script = table.script();
  std::vector<std::vector<SylOption>> per_syllable;

  for (std::size_t si = 0; si < syllables.size(); ++si) {
    const auto& syl = syllables[si];
    std::vector<SylOption> options;

    auto add_option = [&](const OnsetUnit& onset, const Rhyme& rhyme, int weight,
                          const std::string& trace) {
      BurmeseSyllable b;
      b.onset = onset;
      b.rhyme = rhyme;
      if (!syllable_valid(b, script)) return;
      options.push_back({std::move(b), weight, trace});
    };

    if (const auto* special = table.special(syl.spelling)) {
      for (std::size_t i = 0; i < special->pieces.size(); ++i) {
        const auto& piece = special->pieces[i];
        if (piece.kind != FragmentPiece::Kind::Literal) continue;
        for (const auto& tone_variant : *table.tone_mapping(syl.tone)) {
          // specials take the tone on their last syllable when possible
          std::vector<BurmeseSyllable> syls = piece.literal;
          Rhyme r = syls.back().rhyme;
          if (apply_tone(r, tone_variant.first, script)) syls.back().rhyme = r;
          SylOption o;
          o.syllable = syls[0];
          o.weight = special->weights[i] + tone_variant.second;
          o.trace = "py:" + syl.spelling + ">" + special->raws[i];
          if (syls.size() == 1) options.push_back(std::move(o));
        }
      }
      if (!options.empty()) {
        per_syllable.push_back(std::move(options));
        continue;
      }
    }

    std::string final_key = syl.final_part;
    if (final_key == "i" && is_apical_initial(syl.initial)) final_key = "i@zcs";
    const auto* ini_map = table.initial_mapping(syl.initial);
    const auto* fin_map = table.final_mapping(final_key);
    if (!ini_map || !fin_map)
      throw InvalidPinyin("no mapping for syllable '" + syl.spelling + "'", syl.src_begin);
    const auto* tones = table.tone_mapping(syl.tone);
    if (!tones) throw InvalidPinyin("no tone mapping", syl.src_begin);

    for (std::size_t ii = 0; ii < ini_map->pieces.size(); ++ii) {
      const auto& ip = ini_map->pieces[ii];
      if (ip.kind != FragmentPiece::Kind::Onset || ip.onset_units.size() != 1) continue;
      OnsetUnit onset = ip.onset_units[0];
      for (std::size_t fi = 0; fi < fin_map->pieces.size(); ++fi) {
        const auto& fp = fin_map->pieces[fi];
        if (fp.kind != FragmentPiece::Kind::RhymeTemplate) continue;
        OnsetUnit on = onset;
        MedialSet extra = fp.extra_medials;
        // ရှ absorbs a following ya medial
        if (on.base == Letter::Ra && on.medials.has(Medial::Ha) && extra.has(Medial::Ya)) {
          MedialSet keep;
          extra.for_each([&](Medial m) {
            if (m != Medial::Ya) keep.add(m);
          });
          extra = keep;
        }
        extra.for_each([&](Medial m) { on.medials.add(m); });
        for (const auto& [tone, tone_w] : *tones) {
          Rhyme r = fp.rhyme;
          if (!apply_tone(r, tone, script)) continue;
          add_option(on, r,
                     ini_map->weights[ii] + fin_map->weights[fi] + tone_w,
                     "py:" + syl.spelling + ">" + ini_map->raws[ii] + fin_map->raws[fi] +
                         ":t" + std::to_string(syl.tone));
        }
        // first-syllable nasal drop in word mode
        if (mode == PinyinMode::Word && si == 0 && syllables.size() >= 2) {
          if (const auto* drop = table.dropped_final(syl.final_part)) {
            OnsetUnit on2 = onset;
            MedialSet extra2 = drop->extra_medials;
            if (on2.base == Letter::Ra && on2.medials.has(Medial::Ha) &&
                extra2.has(Medial::Ya)) {
              MedialSet keep;
              extra2.for_each([&](Medial m) {
                if (m != Medial::Ya) keep.add(m);
              });
              extra2 = keep;
            }
            extra2.for_each([&](Medial m) { on2.medials.add(m); });
            Rhyme r = drop->rhyme;
            if (r.ending == Ending::Open) {
              apply_tone(r, Tone::Creaky, script);
              add_option(on2, r, ini_map->weights[ii] + fin_map->weights[fi],
                         "py:" + syl.spelling + ">" + ini_map->raws[ii] + "+drop");
            }
          }
        }
      }
    }
    if (options.empty())
      throw InvalidPinyin("syllable '" + syl.spelling + "' produced no output", syl.src_begin);
    std::stable_sort(options.begin(), options.end(), [&](const SylOption& a, const SylOption& b) {
      if (a.weight != b.weight) return a.weight < b.weight;
      return compose({a.syllable}, script) < compose({b.syllable}, script);
    });
    per_syllable.push_back(std::move(options));
  }

  // full cartesian combination (inputs are short)
  std::vector<Candidate> results;
  std::map<std::string, std::size_t> by_text;
  std::vector<std::size_t> idx(per_syllable.size(), 0);
  std::size_t combos = 1;
  for (const auto& v : per_syllable) combos *= v.size();
  combos = std::min<std::size_t>(combos, 4096);
  for (std::size_t count = 0; count < combos; ++count) {
    Candidate c;
    for (std::size_t i = 0; i < per_syllable.size(); ++i) {
      const auto& o = per_syllable[i][idx[i]];
      c.syllables.push_back(o.syllable);
      c.score += o.weight;
      c.rule_trace.push_back(o.trace);
    }
    c.text = compose(c.syllables, script);
    for (std::size_t i = 0; i < syllables.size(); ++i) {
      c.alignment.push_back({syllables[i].src_begin, syllables[i].src_end,
                             FragmentKind::Literal, compose({c.syllables[i]}, script)});
    }
    if (!by_text.count(c.text)) {
      by_text[c.text] = results.size();
      results.push_back(std::move(c));
    }
    // odometer
    std::size_t i = 0;
    while (i < idx.size()) {
      if (++idx[i] < per_syllable[i].size()) break;
      idx[i] = 0;
      ++i;
    }
    if (i == idx.size()) break;
  }
  std::stable_sort(results.begin(), results.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.text < b.text;
  });
  if (results.size() > static_cast<std::size_t>(k)) results.resize(static_cast<std::size_t>(k));
  return results;
}

}  // namespace translit
