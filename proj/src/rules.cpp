#include "translit/rules.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "translit/utf8.hpp"

namespace translit {

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::Lexicon: return "lexicon";
    case Tier::GraphemeOverride: return "grapheme_override";
    case Tier::Cluster: return "cluster";
    case Tier::Default: return "default";
  }
  return "?";
}

namespace {

std::optional<Tier> tier_from_name(std::string_view s) {
  if (s == "lexicon") return Tier::Lexicon;
  if (s == "grapheme_override") return Tier::GraphemeOverride;
  if (s == "cluster") return Tier::Cluster;
  if (s == "default") return Tier::Default;
  return std::nullopt;
}

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

constexpr char32_t kAsatCp = 0x103A;

bool is_medial_cp(char32_t cp) { return cp >= 0x103B && cp <= 0x103E; }

// fragment token -> piece
FragmentPiece parse_piece(const std::string& token, const ScriptTable& table) {
  FragmentPiece piece;
  piece.text = token;
  if (token == "0") {
    piece.kind = FragmentPiece::Kind::Drop;
    piece.text.clear();
    return piece;
  }
  auto cps = utf8::decode(token);
  if (!cps.empty() && token.back() == '-') {
    piece.kind = FragmentPiece::Kind::Onset;
    cps.pop_back();
    piece.text.pop_back();
    if (cps.empty()) throw InvalidFragment("empty onset fragment");
    for (char32_t cp : cps) {
      if (auto l = letter_from_codepoint(cp)) {
        piece.onset_units.push_back({*l, {}, false});
      } else if (is_medial_cp(cp)) {
        if (piece.onset_units.empty())
          throw InvalidFragment("medial sign before any letter in '" + token + "'");
        piece.onset_units.back().medials.add(static_cast<Medial>(cp - 0x103B));
      } else {
        throw InvalidFragment("unexpected codepoint in onset fragment '" + token + "'");
      }
    }
    return piece;
  }
  if (!cps.empty() && cps.front() == U'+') {
    piece.kind = FragmentPiece::Kind::RhymeTemplate;
    piece.text = token.substr(1);
    if (cps.size() == 1) {
      piece.rhyme = Rhyme{};  // inherent vowel
      return piece;
    }
    // parse by attaching the signs to a neutral letter
    std::string probe = "က" + token.substr(1);
    std::vector<BurmeseSyllable> syls;
    try {
      syls = decompose(probe, table);
    } catch (const UnparseableText&) {
      throw InvalidFragment("unparseable rhyme fragment '" + token + "'");
    }
    if (syls.size() != 1 || !syls[0].killer_coda.empty() || syls[0].literal_override)
      throw InvalidFragment("rhyme fragment '" + token + "' is not a single rhyme");
    piece.rhyme = syls[0].rhyme;
    piece.extra_medials = syls[0].onset.medials;
    if (!table.rhyme_valid(piece.rhyme))
      throw InvalidFragment("rhyme fragment '" + token + "' violates the rhyme inventory");
    return piece;
  }
  if (!cps.empty() && cps.back() == kAsatCp) {
    // killer letter: base + medials + asat
    piece.kind = FragmentPiece::Kind::Killer;
    auto base = letter_from_codepoint(cps[0]);
    if (!base) throw InvalidFragment("killer fragment '" + token + "' lacks a base letter");
    piece.killer.base = *base;
    for (std::size_t i = 1; i + 1 < cps.size(); ++i) {
      if (!is_medial_cp(cps[i]))
        throw InvalidFragment("killer fragment '" + token + "' has a non-medial sign");
      piece.killer.medials.add(static_cast<Medial>(cps[i] - 0x103B));
    }
    return piece;
  }
  // literal syllables
  piece.kind = FragmentPiece::Kind::Literal;
  try {
    piece.literal = decompose(token, table);
  } catch (const UnparseableText&) {
    throw InvalidFragment("unparseable literal fragment '" + token + "'");
  }
  for (const auto& s : piece.literal)
    if (!syllable_valid(s, table))
      throw InvalidFragment("literal fragment '" + token + "' has an invalid syllable");
  return piece;
}

std::vector<FragmentPiece> parse_fragment(const std::string& raw, const ScriptTable& table) {
  std::vector<FragmentPiece> pieces;
  std::istringstream iss(raw);
  std::string token;
  while (iss >> token) pieces.push_back(parse_piece(token, table));
  if (pieces.empty()) throw InvalidFragment("empty output fragment");
  return pieces;
}

const std::set<std::string>& known_predicates() {
  static const std::set<std::string> preds = {
      "word_initial", "word_final", "hiatus", "silent_e", "syllabic_r", "syllabic_l",
      "doubled", "doubled_nasal", "doubled_obstruent", "doubled_liquid", "nasal_follows",
      "onset_absent", "onset_present", "coda_none", "coda_obstruent", "coda_nasal",
      "coda_m", "coda_n", "coda_ng", "coda_r", "coda_l", "coda_lm", "coda_rn",
      "coda_nasal_obstruent", "before_r", "before_l", "hiatus_after_i",
      "hiatus_after_round", "onset_palatalizable"};
  return preds;
}

}  // namespace

// ---------------------------------------------------------------------------
// RuleSet loading

void RuleSet::add_rule(RewriteRule rule) {
  for (const auto& r : rules_)
    if (r.id == rule.id) throw DuplicateRule("duplicate rule " + rule.id);
  rules_.push_back(std::move(rule));
}

bool RuleSet::ablate(std::string_view rule_id) {
  auto it = std::find_if(rules_.begin(), rules_.end(),
                         [&](const RewriteRule& r) { return r.id == rule_id; });
  if (it == rules_.end()) return false;
  rules_.erase(it);
  return true;
}

RuleSet RuleSet::parse(std::string_view text, std::string_view origin, const ScriptTable& table) {
  RuleSet rs;
  rs.script_ = &table;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& why) {
    throw ParseError(std::string(origin) + ":" + std::to_string(lineno) + ": " + why, lineno);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    const std::string& kind = fields[0];
    if (kind == "grapheme") {
      if (fields.size() < 3) err("grapheme line needs 3 fields");
      GraphemeClass klass;
      if (fields[2] == "consonantal")
        klass = GraphemeClass::Consonantal;
      else if (fields[2] == "vocalic")
        klass = GraphemeClass::Vocalic;
      else
        err("unknown grapheme class '" + fields[2] + "'");
      rs.inventory_.add(fields[1], klass);
      continue;
    }
    if (kind == "onset") {
      if (fields.size() < 2) err("onset line needs a pattern");
      rs.whitelist_.insert(fields[1]);
      continue;
    }
    auto tier = tier_from_name(kind);
    if (!tier) err("unknown line kind '" + kind + "'");
    if (*tier == Tier::Lexicon) err("lexicon entries live in the lexicon file");
    if (fields.size() != 5) err("rule line needs 5 tab-separated fields");

    RewriteRule rule;
    rule.tier = *tier;
    auto at = fields[1].rfind('@');
    if (at == std::string::npos) err("pattern lacks @position");
    std::string pos = fields[1].substr(at + 1);
    if (pos == "onset")
      rule.pos = Position::Onset;
    else if (pos == "nucleus")
      rule.pos = Position::Nucleus;
    else if (pos == "coda")
      rule.pos = Position::Coda;
    else
      err("unknown position '" + pos + "'");
    rule.pattern = split(fields[1].substr(0, at), '+');
    if (rule.pattern.empty() || rule.pattern[0].empty()) err("empty pattern");

    if (fields[2] != "*") {
      rule.context = split(fields[2], ',');
      for (const auto& c : rule.context) {
        std::string name = (!c.empty() && c[0] == '!') ? c.substr(1) : c;
        if (!known_predicates().count(name)) err("unknown context predicate '" + name + "'");
      }
    }

    auto outs = split(fields[3], '|');
    auto weights = split(fields[4], '|');
    if (weights.size() != 1 && weights.size() != outs.size())
      err("weight count does not match output count");
    for (std::size_t i = 0; i < outs.size(); ++i) {
      RuleOutput out;
      out.raw = outs[i];
      out.pieces = parse_fragment(outs[i], table);  // may throw InvalidFragment
      const std::string& w = weights.size() == 1 ? weights[0] : weights[i];
      try {
        out.weight = std::stoi(w);
      } catch (...) {
        err("bad weight '" + w + "'");
      }
      if (out.weight < 0) err("negative weight");
      out.self_onset = out.pieces.front().kind == FragmentPiece::Kind::Onset ||
                       out.pieces.front().kind == FragmentPiece::Kind::Literal;
      rule.outputs.push_back(std::move(out));
    }
    rule.id = std::string(tier_name(rule.tier)) + ":" + fields[1] + ":" + fields[2];
    rs.add_rule(std::move(rule));  // may throw DuplicateRule
  }
  return rs;
}

RuleSet RuleSet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open rule pack: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

void RuleSet::parse_lexicon(std::string_view text, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 2)
      throw ParseError(std::string(origin) + ":" + std::to_string(lineno) +
                           ": lexicon line needs source TAB target",
                       lineno);
    LexiconEntry e;
    e.source = fields[0];
    std::transform(e.source.begin(), e.source.end(), e.source.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    e.target = fields[1];
    if (fields.size() > 2) e.note = fields[2];
    lexicon_[e.source] = std::move(e);
  }
}

void RuleSet::load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open lexicon: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  parse_lexicon(ss.str(), path);
}

// ---------------------------------------------------------------------------
// context predicates

namespace {

enum class ConsClass { Nasal, Liquid, Obstruent };

ConsClass cons_class(const std::string& t) {
  if (t == "M" || t == "N" || t == "NG") return ConsClass::Nasal;
  if (t == "R" || t == "L") return ConsClass::Liquid;
  return ConsClass::Obstruent;
}

struct ChunkContext {
  const LatinChunk* c = nullptr;
  bool onset_absent = false;
  bool coda_none = false, coda_obstruent = false, coda_nasal = false;
  bool coda_m = false, coda_n = false, coda_ng = false, coda_r = false, coda_l = false;
  bool coda_lm = false, coda_rn = false, coda_nasal_obstruent = false;
  bool doubled_nasal = false, doubled_obstruent = false, doubled_liquid = false;
  bool hiatus_after_i = false, hiatus_after_round = false;
  bool onset_palatalizable = false;
};

ChunkContext make_context(const std::vector<LatinChunk>& chunks, std::size_t idx) {
  ChunkContext x;
  const LatinChunk& c = chunks[idx];
  x.c = &c;
  x.onset_absent = c.onset.empty();
  x.coda_none = c.coda.empty();
  bool saw_nasal = false;
  for (const auto& g : c.coda) {
    switch (cons_class(g.text)) {
      case ConsClass::Nasal:
        x.coda_nasal = true;
        saw_nasal = true;
        if (g.text == "M") x.coda_m = true;
        if (g.text == "N") x.coda_n = true;
        if (g.text == "NG") x.coda_ng = true;
        break;
      case ConsClass::Liquid:
        if (g.text == "R") x.coda_r = true;
        if (g.text == "L") x.coda_l = true;
        break;
      case ConsClass::Obstruent:
        x.coda_obstruent = true;
        if (saw_nasal) x.coda_nasal_obstruent = true;
        break;
    }
  }
  x.coda_lm = c.coda.size() == 2 && c.coda[0].text == "L" &&
              cons_class(c.coda[1].text) == ConsClass::Nasal;
  x.coda_rn = x.coda_nasal && x.coda_r;
  if (c.has(kDoubledFollows) && idx + 1 < chunks.size() && !chunks[idx + 1].onset.empty()) {
    switch (cons_class(chunks[idx + 1].onset.front().text)) {
      case ConsClass::Nasal: x.doubled_nasal = true; break;
      case ConsClass::Liquid: x.doubled_liquid = true; break;
      case ConsClass::Obstruent: x.doubled_obstruent = true; break;
    }
  }
  if (c.onset.empty() && idx > 0) {
    const LatinChunk& p = chunks[idx - 1];
    if (p.nucleus.size() == 1 && p.nucleus[0].text == "I" && !p.has(kWordInitial))
      x.hiatus_after_i = true;
    if (!p.nucleus.empty()) {
      const std::string& t = p.nucleus.back().text;
      if (t == "U" || t == "O" || t == "OO" || t == "OU" || t == "OW" || t == "AU" ||
          t == "AW" || t == "EW")
        x.hiatus_after_round = true;
    }
  }
  if (!c.onset.empty()) {
    static const std::set<std::string> palatal = {"C", "K",  "CK", "Q", "M", "B",
                                                  "P", "PH", "F",  "G", "H"};
    x.onset_palatalizable = palatal.count(c.onset.back().text) > 0;
  }
  return x;
}

bool eval_pred(const ChunkContext& x, std::string_view name) {
  const LatinChunk& c = *x.c;
  if (name == "word_initial") return c.has(kWordInitial);
  if (name == "word_final") return c.has(kWordFinal);
  if (name == "hiatus") return c.has(kHiatusStart);
  if (name == "silent_e") return c.has(kSilentEFinal);
  if (name == "syllabic_r") return c.has(kSyllabicR);
  if (name == "syllabic_l") return c.has(kSyllabicL);
  if (name == "doubled") return c.has(kDoubledFollows);
  if (name == "doubled_nasal") return x.doubled_nasal;
  if (name == "doubled_obstruent") return x.doubled_obstruent;
  if (name == "doubled_liquid") return x.doubled_liquid;
  if (name == "nasal_follows") return c.has(kNasalFollows);
  if (name == "onset_absent") return x.onset_absent;
  if (name == "onset_present") return !x.onset_absent;
  if (name == "coda_none") return x.coda_none;
  if (name == "coda_obstruent") return x.coda_obstruent;
  if (name == "coda_nasal") return x.coda_nasal;
  if (name == "coda_m") return x.coda_m;
  if (name == "coda_n") return x.coda_n;
  if (name == "coda_ng") return x.coda_ng;
  if (name == "coda_r") return x.coda_r;
  if (name == "coda_l") return x.coda_l;
  if (name == "coda_lm") return x.coda_lm;
  if (name == "coda_rn") return x.coda_rn;
  if (name == "coda_nasal_obstruent") return x.coda_nasal_obstruent;
  if (name == "before_r") return c.has(kBeforeR);
  if (name == "before_l") return c.has(kBeforeL);
  if (name == "hiatus_after_i") return x.hiatus_after_i;
  if (name == "hiatus_after_round") return x.hiatus_after_round;
  if (name == "onset_palatalizable") return x.onset_palatalizable;
  return false;
}

bool context_holds(const RewriteRule& r, const ChunkContext& x) {
  for (const auto& pred : r.context) {
    if (pred.empty()) continue;
    if (pred[0] == '!') {
      if (eval_pred(x, std::string_view(pred).substr(1))) return false;
    } else {
      if (!eval_pred(x, pred)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// chunk option assembly

struct PieceUse {
  const FragmentPiece* piece;
  std::size_t src_begin, src_end;
  bool merge_back;  // drops merge into the previous span
};

struct ChunkOption {
  std::vector<BurmeseSyllable> syllables;
  std::string text;
  int weight = 0;
  std::vector<std::string> trace;
  std::vector<AlignmentSpan> spans;
};

struct MatchedOutput {
  const RewriteRule* rule;
  std::size_t output_idx;
};

// rules matching `pattern` at one slot, with per-span tier dominance applied:
// rules above the best matching tier survive only with strictly cheaper output
std::vector<const RewriteRule*> matching_rules(const RuleSet& rs, Position pos,
                                               const std::vector<std::string>& pattern,
                                               const ChunkContext& x) {
  std::vector<const RewriteRule*> matches;
  for (const auto& r : rs.rules()) {
    if (r.pos != pos || r.pattern != pattern) continue;
    if (!context_holds(r, x)) continue;
    matches.push_back(&r);
  }
  if (matches.size() < 2) return matches;
  Tier best = Tier::Default;
  for (auto* r : matches) best = std::min(best, r->tier);
  int best_weight = INT32_MAX;
  for (auto* r : matches)
    if (r->tier == best)
      for (const auto& o : r->outputs) best_weight = std::min(best_weight, o.weight);
  std::vector<const RewriteRule*> kept;
  for (auto* r : matches) {
    if (r->tier == best) {
      kept.push_back(r);
      continue;
    }
    int w = INT32_MAX;
    for (const auto& o : r->outputs) w = std::min(w, o.weight);
    if (w < best_weight) kept.push_back(r);
  }
  return kept;
}

struct SlotChoice {
  const RewriteRule* rule;
  std::size_t out_idx;
  std::size_t g_begin, g_end;  // grapheme range in the group
};

// Tile a grapheme group (onset or coda) with matching rules. Returns one
// entry per complete tiling; each entry lists the slot choices in order.
void tile_group(const RuleSet& rs, Position pos, const std::vector<Grapheme>& group,
                const ChunkContext& x, std::size_t from, std::vector<SlotChoice>& current,
                std::vector<std::vector<SlotChoice>>& out) {
  if (from == group.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t len = group.size() - from; len >= 1; --len) {
    std::vector<std::string> pattern;
    for (std::size_t i = from; i < from + len; ++i) pattern.push_back(group[i].text);
    for (const RewriteRule* r : matching_rules(rs, pos, pattern, x)) {
      for (std::size_t oi = 0; oi < r->outputs.size(); ++oi) {
        current.push_back({r, oi, from, from + len});
        tile_group(rs, pos, group, x, from + len, current, out);
        current.pop_back();
      }
    }
  }
}

int tiling_weight(const std::vector<SlotChoice>& t) {
  int w = 0;
  for (const auto& s : t) w += static_cast<int>(s.rule->outputs[s.out_idx].weight);
  return w;
}

std::size_t group_span_begin(const std::vector<Grapheme>& g, std::size_t i) { return g[i].pos; }
std::size_t group_span_end(const std::vector<Grapheme>& g, std::size_t i) {
  return g[i - 1].pos + g[i - 1].text.size();
}

}  // namespace

// ---------------------------------------------------------------------------
// transliterate

namespace {

constexpr int kMaxExpansions = 4096;
constexpr std::size_t kMaxChunkOptions = 96;

struct AssembleResult {
  std::vector<BurmeseSyllable> syllables;
  std::vector<AlignmentSpan> spans;
  int main_idx = -1;          // syllable carrying the chunk's rhyme
  bool dropped_obstruent = false;
  bool ok = true;
};

AssembleResult assemble(const std::vector<std::pair<const FragmentPiece*, std::pair<std::size_t, std::size_t>>>& pieces,
                        const std::vector<ConsClass>* coda_classes_for_drops,
                        const std::vector<std::pair<std::size_t, bool>>& drop_is_obstruent,
                        const ScriptTable& table) {
  (void)coda_classes_for_drops;
  AssembleResult res;
  std::vector<OnsetUnit> pending;
  auto flush_pending_except_last = [&](bool keep_last) {
    std::size_t upto = pending.size() - (keep_last ? 1 : 0);
    for (std::size_t i = 0; i < upto; ++i) {
      BurmeseSyllable s;
      s.onset = pending[i];
      res.syllables.push_back(std::move(s));
    }
    if (keep_last) {
      pending.erase(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(upto));
    } else {
      pending.clear();
    }
  };

  std::size_t drop_i = 0;
  for (const auto& [piece, span] : pieces) {
    switch (piece->kind) {
      case FragmentPiece::Kind::Onset: {
        for (const auto& u : piece->onset_units) pending.push_back(u);
        res.spans.push_back({span.first, span.second, FragmentKind::Onset, piece->text});
        break;
      }
      case FragmentPiece::Kind::RhymeTemplate: {
        if (pending.empty()) {
          res.ok = false;
          return res;
        }
        flush_pending_except_last(true);
        BurmeseSyllable s;
        s.onset = pending[0];
        pending.clear();
        piece->extra_medials.for_each([&](Medial m) { s.onset.medials.add(m); });
        s.rhyme = piece->rhyme;
        res.syllables.push_back(std::move(s));
        res.main_idx = static_cast<int>(res.syllables.size()) - 1;
        res.spans.push_back({span.first, span.second, FragmentKind::Vowel, piece->text});
        break;
      }
      case FragmentPiece::Kind::Killer: {
        if (res.syllables.empty() && pending.empty()) {
          res.ok = false;
          return res;
        }
        flush_pending_except_last(false);
        if (res.syllables.empty()) {
          res.ok = false;
          return res;
        }
        res.syllables.back().killer_coda.push_back(piece->killer);
        res.spans.push_back({span.first, span.second, FragmentKind::Killer, piece->text});
        break;
      }
      case FragmentPiece::Kind::Literal: {
        flush_pending_except_last(false);
        for (const auto& s : piece->literal) res.syllables.push_back(s);
        res.spans.push_back({span.first, span.second, FragmentKind::Literal, piece->text});
        break;
      }
      case FragmentPiece::Kind::Drop: {
        if (drop_i < drop_is_obstruent.size() && drop_is_obstruent[drop_i].second)
          res.dropped_obstruent = true;
        ++drop_i;
        // extend the previous span over the dropped graphemes
        if (!res.spans.empty()) {
          res.spans.back().src_end = std::max(res.spans.back().src_end, span.second);
        } else {
          res.spans.push_back({span.first, span.second, FragmentKind::Vowel, ""});
        }
        break;
      }
    }
  }
  flush_pending_except_last(false);
  if (res.syllables.empty()) {
    res.ok = false;
    return res;
  }
  for (const auto& s : res.syllables)
    if (!syllable_valid(s, table)) {
      res.ok = false;
      return res;
    }
  return res;
}

void finalize_chunk_option(ChunkOption opt, const LatinChunk& chunk,
                           std::vector<ChunkOption>& out, const ScriptTable& table) {
  // stretch spans to cover the chunk contiguously (elided letters included)
  if (!opt.spans.empty()) {
    std::stable_sort(opt.spans.begin(), opt.spans.end(),
                     [](const AlignmentSpan& a, const AlignmentSpan& b) {
                       if (a.src_begin != b.src_begin) return a.src_begin < b.src_begin;
                       return a.src_end < b.src_end;
                     });
    opt.spans.front().src_begin = std::min(opt.spans.front().src_begin, chunk.src_begin);
    for (std::size_t i = 0; i + 1 < opt.spans.size(); ++i) {
      if (opt.spans[i].src_end < opt.spans[i + 1].src_begin)
        opt.spans[i].src_end = opt.spans[i + 1].src_begin;
    }
    opt.spans.back().src_end = std::max(opt.spans.back().src_end, chunk.src_end);
  }
  opt.text = compose(opt.syllables, table);
  out.push_back(std::move(opt));
}

std::vector<ChunkOption> build_chunk_options(const RuleSet& rs,
                                             const std::vector<LatinChunk>& chunks,
                                             std::size_t idx) {
  const LatinChunk& chunk = chunks[idx];
  const ChunkContext ctx = make_context(chunks, idx);
  const ScriptTable& table = rs.script();

  // --- onset slot
  struct GroupOption {
    std::vector<SlotChoice> slots;
    int weight = 0;
    bool deferred = false;  // empty-onset slot handled by a self-onset nucleus rule
  };
  std::vector<GroupOption> onset_opts;
  if (chunk.onset.empty()) {
    std::vector<std::string> empty_pat = {"_"};
    for (const RewriteRule* r : matching_rules(rs, Position::Onset, empty_pat, ctx))
      for (std::size_t oi = 0; oi < r->outputs.size(); ++oi)
        onset_opts.push_back({{{r, oi, 0, 0}}, r->outputs[oi].weight, false});
    onset_opts.push_back({{}, 0, true});  // pair only with self-onset nucleus outputs
  } else {
    std::vector<std::vector<SlotChoice>> tilings;
    std::vector<SlotChoice> cur;
    tile_group(rs, Position::Onset, chunk.onset, ctx, 0, cur, tilings);
    // a rule covering the whole cluster shadows piecewise tilings unless they
    // are strictly cheaper
    int best_full = INT32_MAX;
    for (const auto& t : tilings)
      if (t.size() == 1 && t[0].g_end - t[0].g_begin == chunk.onset.size() &&
          chunk.onset.size() > 1)
        best_full = std::min(best_full, tiling_weight(t));
    for (const auto& t : tilings) {
      int w = tiling_weight(t);
      bool full = t.size() == 1 && t[0].g_end - t[0].g_begin == chunk.onset.size();
      if (best_full != INT32_MAX && !full && w >= best_full) continue;
      onset_opts.push_back({t, w, false});
    }
  }

  // --- nucleus slot
  struct NucleusOption {
    const RewriteRule* rule = nullptr;
    std::size_t out_idx = 0;
    int weight = 0;
    bool implicit_schwa = false;
  };
  std::vector<NucleusOption> nucleus_opts;
  {
    std::vector<std::string> pattern;
    if (chunk.nucleus.empty()) {
      pattern = {"_"};
    } else {
      for (const auto& g : chunk.nucleus) pattern.push_back(g.text);
    }
    for (const RewriteRule* r : matching_rules(rs, Position::Nucleus, pattern, ctx))
      for (std::size_t oi = 0; oi < r->outputs.size(); ++oi)
        nucleus_opts.push_back({r, oi, r->outputs[oi].weight, false});
    if (nucleus_opts.empty() && chunk.nucleus.empty())
      nucleus_opts.push_back({nullptr, 0, 0, true});  // bare carrier consonants
  }

  // --- coda slot
  std::vector<std::vector<SlotChoice>> coda_tilings;
  {
    std::vector<SlotChoice> cur;
    tile_group(rs, Position::Coda, chunk.coda, ctx, 0, cur, coda_tilings);
  }

  std::vector<ChunkOption> options;
  for (const auto& on : onset_opts) {
    for (const auto& nu : nucleus_opts) {
      const bool self_onset = nu.rule && nu.rule->outputs[nu.out_idx].self_onset;
      if (on.deferred != self_onset) continue;
      for (const auto& co : coda_tilings) {
        std::vector<std::pair<const FragmentPiece*, std::pair<std::size_t, std::size_t>>> pieces;
        std::vector<std::pair<std::size_t, bool>> drop_obstruent;
        int weight = on.weight + nu.weight;
        std::vector<std::string> trace;

        for (const auto& s : on.slots) {
          const auto& out = s.rule->outputs[s.out_idx];
          std::size_t b = chunk.onset[s.g_begin].pos;
          std::size_t e = chunk.onset[s.g_end - 1].pos + chunk.onset[s.g_end - 1].text.size();
          if (s.g_begin == s.g_end) b = e = chunk.src_begin;  // placeholder on empty onset
          for (const auto& p : out.pieces) pieces.push_back({&p, {b, e}});
          trace.push_back(s.rule->id + "#" + std::to_string(s.out_idx));
        }
        if (nu.implicit_schwa) {
          // no rhyme piece; pending onsets become bare syllables
        } else {
          const auto& out = nu.rule->outputs[nu.out_idx];
          std::size_t b, e;
          if (chunk.nucleus.empty()) {
            b = chunk.coda.empty() ? chunk.src_end : chunk.coda.front().pos;
            e = b;
          } else {
            b = chunk.nucleus.front().pos;
            e = chunk.nucleus.back().pos + chunk.nucleus.back().text.size();
          }
          for (const auto& p : out.pieces) pieces.push_back({&p, {b, e}});
          trace.push_back(nu.rule->id + "#" + std::to_string(nu.out_idx));
        }
        for (const auto& s : co) {
          const auto& out = s.rule->outputs[s.out_idx];
          std::size_t b = chunk.coda[s.g_begin].pos;
          std::size_t e = chunk.coda[s.g_end - 1].pos + chunk.coda[s.g_end - 1].text.size();
          bool obstruent = false;
          for (std::size_t i = s.g_begin; i < s.g_end; ++i)
            obstruent |= cons_class(chunk.coda[i].text) == ConsClass::Obstruent;
          for (const auto& p : out.pieces) {
            pieces.push_back({&p, {b, e}});
            if (p.kind == FragmentPiece::Kind::Drop)
              drop_obstruent.push_back({pieces.size() - 1, obstruent});
          }
          weight += out.weight;
          trace.push_back(s.rule->id + "#" + std::to_string(s.out_idx));
        }
        auto res = assemble(pieces, nullptr, drop_obstruent, table);
        if (!res.ok) continue;

        ChunkOption base;
        base.syllables = std::move(res.syllables);
        base.weight = weight;
        base.trace = std::move(trace);
        base.spans = std::move(res.spans);

        // checked nasal: a dropped obstruent after a nasalized rhyme adds the
        // creaky tone
        if (res.main_idx >= 0) {
          auto& rh = base.syllables[static_cast<std::size_t>(res.main_idx)].rhyme;
          if (rh.ending == Ending::Nasal && res.dropped_obstruent && rh.tone == Tone::Low) {
            rh.tone = Tone::Creaky;
            base.trace.push_back("engine:creaky_checked_nasal");
          }
        }
        finalize_chunk_option(base, chunk, options, table);

        if (res.main_idx >= 0) {
          const auto& rh = options.back().syllables[static_cast<std::size_t>(res.main_idx)].rhyme;
          const bool open_low = rh.tone == Tone::Low && rh.ending != Ending::Glottal &&
                                rh.nucleus != Nucleus::Schwa;
          if (open_low) {
            ChunkOption high = options.back();
            high.syllables[static_cast<std::size_t>(res.main_idx)].rhyme.tone = Tone::High;
            high.weight += 1;
            high.trace.push_back(chunk.has(kSilentEFinal) ? "engine:silent_e_high"
                                                          : "engine:tone_variant");
            finalize_chunk_option(std::move(high), chunk, options, table);
          }
        }
      }
    }
  }

  std::stable_sort(options.begin(), options.end(), [](const ChunkOption& a, const ChunkOption& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.text < b.text;
  });
  if (options.size() > kMaxChunkOptions) options.resize(kMaxChunkOptions);
  return options;
}

}  // namespace

std::vector<Candidate> transliterate(std::string_view word, const RuleSet& rs, int k) {
  if (k < 1) k = 1;
  std::string upper;
  for (char c : word) {
    if (c == '\'' || c == '-') continue;
    upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }

  std::vector<Candidate> results;
  std::map<std::string, std::size_t> by_text;

  if (rs.lexicon_enabled()) {
    auto it = rs.lexicon().find(upper);
    if (it != rs.lexicon().end()) {
      Candidate c;
      c.text = it->second.target;
      try {
        c.syllables = decompose(c.text, rs.script());
      } catch (const UnparseableText&) {
        BurmeseSyllable s;
        s.literal_override = c.text;
        c.syllables = {s};
      }
      c.score = 0;
      c.from_lexicon = true;
      c.rule_trace = {"lexicon:" + it->second.source};
      c.alignment = {{0, upper.size(), FragmentKind::Literal, c.text}};
      by_text[c.text] = results.size();
      results.push_back(std::move(c));
    }
  }

  auto graphemes = tokenize(word, rs.inventory());
  auto chunks = chunk(graphemes, rs.onset_whitelist());

  std::vector<std::vector<ChunkOption>> all_options;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    auto opts = build_chunk_options(rs, chunks, i);
    if (opts.empty()) {
      std::string text = chunk_onset_text(chunks[i]) + chunk_nucleus_text(chunks[i]) +
                         chunk_coda_text(chunks[i]);
      throw NoRuleApplicable("no rule applicable to chunk '" + text + "' of '" + upper + "'",
                             text);
    }
    all_options.push_back(std::move(opts));
  }

  // enumerate combinations in weight order
  const std::size_t m = all_options.size();
  struct Node {
    int weight;
    std::uint64_t seq;
    std::vector<std::uint16_t> choice;
  };
  auto node_cmp = [](const Node& a, const Node& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.seq > b.seq;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(node_cmp)> heap(node_cmp);
  std::set<std::vector<std::uint16_t>> visited;
  std::uint64_t seq = 0;

  auto total_weight = [&](const std::vector<std::uint16_t>& choice) {
    int w = 0;
    for (std::size_t i = 0; i < m; ++i) w += all_options[i][choice[i]].weight;
    return w;
  };

  std::vector<std::uint16_t> root(m, 0);
  heap.push({total_weight(root), seq++, root});
  visited.insert(root);

  int expansions = 0;
  auto kth_score = [&]() -> std::optional<int> {
    if (results.size() < static_cast<std::size_t>(k)) return std::nullopt;
    std::vector<int> scores;
    scores.reserve(results.size());
    for (const auto& r : results) scores.push_back(r.score);
    std::nth_element(scores.begin(), scores.begin() + (k - 1), scores.end());
    return scores[static_cast<std::size_t>(k - 1)];
  };

  while (!heap.empty() && expansions < kMaxExpansions) {
    Node node = heap.top();
    heap.pop();
    ++expansions;
    if (auto ks = kth_score(); ks && node.weight > *ks) break;

    Candidate c;
    c.score = node.weight;
    for (std::size_t i = 0; i < m; ++i) {
      const ChunkOption& opt = all_options[i][node.choice[i]];
      c.text += opt.text;
      c.syllables.insert(c.syllables.end(), opt.syllables.begin(), opt.syllables.end());
      c.alignment.insert(c.alignment.end(), opt.spans.begin(), opt.spans.end());
      c.rule_trace.insert(c.rule_trace.end(), opt.trace.begin(), opt.trace.end());
    }
    auto it = by_text.find(c.text);
    if (it == by_text.end()) {
      by_text[c.text] = results.size();
      results.push_back(std::move(c));
    }

    for (std::size_t i = 0; i < m; ++i) {
      if (node.choice[i] + 1u < all_options[i].size()) {
        auto next = node.choice;
        ++next[i];
        if (visited.insert(next).second) heap.push({total_weight(next), seq++, next});
      }
    }
  }

  std::stable_sort(results.begin(), results.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.from_lexicon != b.from_lexicon) return a.from_lexicon;
    return a.text < b.text;
  });
  if (results.size() > static_cast<std::size_t>(k)) results.resize(static_cast<std::size_t>(k));
  return results;
}

int score_from_trace(const std::vector<std::string>& trace, const RuleSet& rs) {
  int score = 0;
  for (const auto& entry : trace) {
    if (entry.rfind("lexicon:", 0) == 0) continue;
    if (entry == "engine:creaky_checked_nasal") continue;
    if (entry == "engine:tone_variant" || entry == "engine:silent_e_high") {
      score += 1;
      continue;
    }
    auto hash = entry.rfind('#');
    if (hash == std::string::npos) continue;
    std::string id = entry.substr(0, hash);
    std::size_t oi = std::stoul(entry.substr(hash + 1));
    for (const auto& r : rs.rules()) {
      if (r.id == id && oi < r.outputs.size()) {
        score += r.outputs[oi].weight;
        break;
      }
    }
  }
  return score;
}

std::string explain(const Candidate& c, std::string_view word) {
  if (c.from_lexicon && !c.rule_trace.empty()) {
    std::string src = c.rule_trace[0].substr(std::string("lexicon:").size());
    return "lexicon: " + src + "\n";
  }
  std::string out;
  out += std::string(word) + " -> " + c.text + " (score " + std::to_string(c.score) + ")\n";
  for (const auto& t : c.rule_trace) out += "trace: " + t + "\n";
  std::string upper;
  for (char ch : word) {
    if (ch == '\'' || ch == '-') continue;
    upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  out += render_alignment_notation(c.alignment, upper);
  return out;
}

}  // namespace translit
