#include "translit/script.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "translit/utf8.hpp"

namespace translit {

namespace {

constexpr char32_t kTallAa = 0x102B;
constexpr char32_t kAa = 0x102C;
constexpr char32_t kSignE = 0x1031;
constexpr char32_t kAnusvara = 0x1036;
constexpr char32_t kDotBelow = 0x1037;
constexpr char32_t kVisarga = 0x1038;
constexpr char32_t kVirama = 0x1039;
constexpr char32_t kAsat = 0x103A;
constexpr char32_t kMedialFirst = 0x103B;
constexpr char32_t kMedialLast = 0x103E;

constexpr std::string_view kLetterNames[kLetterCount] = {
    "ka",  "kha", "ga",  "gha", "nga", "ca",  "cha", "ja",  "jha", "nya", "nnya",
    "tta", "ttha", "dda", "ddha", "nna", "ta",  "tha", "da",  "dha", "na",
    "pa",  "pha", "ba",  "bha", "ma",  "ya",  "ra",  "la",  "wa",  "sa",  "ha",
    "lla", "a"};

constexpr std::string_view kNucleusNames[] = {"schwa", "a",  "i",  "u",  "e",  "eh",
                                              "o",     "aw", "ai", "au", "ei", "ou"};
constexpr std::string_view kEndingNames[] = {"open", "nasal", "glottal"};
constexpr std::string_view kToneNames[] = {"low", "high", "creaky"};
constexpr std::string_view kSpellingNames[] = {"", "ma", "pa", "anusvara"};

std::uint32_t rhyme_key(const Rhyme& r) {
  return static_cast<std::uint32_t>(r.nucleus) | (static_cast<std::uint32_t>(r.ending) << 8) |
         (static_cast<std::uint32_t>(r.tone) << 16) | (static_cast<std::uint32_t>(r.spelling) << 24);
}

bool is_vowel_sign(char32_t cp) {
  switch (cp) {
    case 0x102B:
    case 0x102C:
    case 0x102D:
    case 0x102E:
    case 0x102F:
    case 0x1030:
    case 0x1031:
    case 0x1032:
    case 0x1036:
      return true;
    default:
      return false;
  }
}

}  // namespace

char32_t letter_codepoint(Letter l) { return 0x1000 + static_cast<char32_t>(l); }

std::optional<Letter> letter_from_codepoint(char32_t cp) {
  if (cp >= 0x1000 && cp < 0x1000 + kLetterCount) return static_cast<Letter>(cp - 0x1000);
  return std::nullopt;
}

std::string_view letter_name(Letter l) { return kLetterNames[static_cast<int>(l)]; }

std::optional<Letter> letter_from_name(std::string_view name) {
  for (int i = 0; i < kLetterCount; ++i)
    if (kLetterNames[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

char32_t medial_codepoint(Medial m) { return kMedialFirst + static_cast<char32_t>(m); }

// ---------------------------------------------------------------------------
// ScriptTable

struct ScriptTableBuilder {
  static void add_rhyme(ScriptTable& t, const Rhyme& r, std::vector<char32_t> signs) {
    t.rhymes_[rhyme_key(r)] = std::move(signs);
  }
  static void finish(ScriptTable& t) {
    // index rhyme renderings that carry a final consonant letter, for the
    // killer-collision check and for diagnostics
    for (const auto& [key, signs] : t.rhymes_) {
      std::size_t letter_pos = signs.size();
      for (std::size_t i = 0; i < signs.size(); ++i) {
        if (letter_from_codepoint(signs[i])) {
          letter_pos = i;
          break;
        }
      }
      if (letter_pos == signs.size()) continue;
      ScriptTable::FinalMergeKey k;
      k.vowel_signs.assign(signs.begin(), signs.begin() + letter_pos);
      k.final_letter = signs[letter_pos];
      Rhyme r;
      r.nucleus = static_cast<Nucleus>(key & 0xFF);
      r.ending = static_cast<Ending>((key >> 8) & 0xFF);
      r.spelling = static_cast<FinalSpelling>((key >> 24) & 0xFF);
      t.final_index_[k] = {r.nucleus, r.ending, r.spelling, r.ending == Ending::Nasal};
    }
  }
};

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return out;
}

std::vector<char32_t> parse_hex_codepoints(const std::string& field, std::string_view origin,
                                           int lineno) {
  std::vector<char32_t> cps;
  std::istringstream iss(field);
  std::string tok;
  while (iss >> tok) {
    char32_t cp = 0;
    for (char c : tok) {
      cp <<= 4;
      if (c >= '0' && c <= '9')
        cp |= c - '0';
      else if (c >= 'a' && c <= 'f')
        cp |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F')
        cp |= c - 'A' + 10;
      else
        throw std::runtime_error(std::string(origin) + ":" + std::to_string(lineno) +
                                 ": bad codepoint '" + tok + "'");
    }
    cps.push_back(cp);
  }
  return cps;
}

template <typename Names>
int name_index(const Names& names, int count, std::string_view what) {
  for (int i = 0; i < count; ++i)
    if (names[i] == what) return i;
  return -1;
}

std::optional<Rhyme> parse_rhyme_key(std::string_view key) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= key.size()) {
    auto dot = key.find('.', start);
    if (dot == std::string_view::npos) {
      parts.push_back(key.substr(start));
      break;
    }
    parts.push_back(key.substr(start, dot - start));
    start = dot + 1;
  }
  if (parts.size() < 3 || parts.size() > 4) return std::nullopt;
  Rhyme r;
  int n = name_index(kNucleusNames, 12, parts[0]);
  int e = name_index(kEndingNames, 3, parts[1]);
  int t = name_index(kToneNames, 3, parts[2]);
  if (n < 0 || e < 0 || t < 0) return std::nullopt;
  r.nucleus = static_cast<Nucleus>(n);
  r.ending = static_cast<Ending>(e);
  r.tone = static_cast<Tone>(t);
  if (parts.size() == 4) {
    int s = name_index(kSpellingNames, 4, parts[3]);
    if (s <= 0) return std::nullopt;
    r.spelling = static_cast<FinalSpelling>(s);
  }
  return r;
}

}  // namespace

ScriptTable ScriptTable::parse(std::string_view text, std::string_view origin) {
  ScriptTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() < 3)
      throw std::runtime_error(std::string(origin) + ":" + std::to_string(lineno) +
                               ": expected 3 tab-separated fields");
    const std::string& kind = fields[0];
    const std::string& key = fields[1];
    if (kind == "version") {
      t.version = std::stoi(key);
    } else if (kind == "letter" || kind == "medial" || kind == "sign") {
      // informative entries; codepoints are fixed by the Unicode block and
      // validated here against the built-in assignments
      auto cps = parse_hex_codepoints(fields[2], origin, lineno);
      if (kind == "letter") {
        auto l = letter_from_name(key);
        if (!l || cps.size() != 1 || cps[0] != letter_codepoint(*l))
          throw std::runtime_error(std::string(origin) + ":" + std::to_string(lineno) +
                                   ": letter entry mismatch for '" + key + "'");
      }
    } else if (kind == "rhyme") {
      auto r = parse_rhyme_key(key);
      if (!r)
        throw std::runtime_error(std::string(origin) + ":" + std::to_string(lineno) +
                                 ": bad rhyme key '" + key + "'");
      ScriptTableBuilder::add_rhyme(t, *r, parse_hex_codepoints(fields[2], origin, lineno));
    } else if (kind == "tall_after") {
      for (char32_t cp : parse_hex_codepoints(fields[2], origin, lineno)) {
        auto l = letter_from_codepoint(cp);
        if (!l)
          throw std::runtime_error(std::string(origin) + ":" + std::to_string(lineno) +
                                   ": tall_after entry is not a letter");
        t.tall_aa_[static_cast<int>(*l)] = true;
      }
    } else if (kind == "indep") {
      for (char32_t cp : parse_hex_codepoints(fields[2], origin, lineno))
        t.independent_vowels_.push_back(cp);
    } else {
      throw std::runtime_error(std::string(origin) + ":" + std::to_string(lineno) +
                               ": unknown kind '" + kind + "'");
    }
  }
  ScriptTableBuilder::finish(t);
  return t;
}

ScriptTable ScriptTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open script table: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

extern const char* kBurmeseScriptTsv;  // script_data.cpp

const ScriptTable& ScriptTable::builtin() {
  static const ScriptTable table = parse(kBurmeseScriptTsv, "<builtin>");
  return table;
}

const std::vector<char32_t>* ScriptTable::rhyme_signs(const Rhyme& r) const {
  auto it = rhymes_.find(rhyme_key(r));
  return it == rhymes_.end() ? nullptr : &it->second;
}

bool ScriptTable::rhyme_valid(const Rhyme& r) const { return rhyme_signs(r) != nullptr; }

bool ScriptTable::is_independent_vowel(char32_t cp) const {
  return std::find(independent_vowels_.begin(), independent_vowels_.end(), cp) !=
         independent_vowels_.end();
}

bool ScriptTable::killer_collides(const Rhyme& open_rhyme, Letter first_killer_base) const {
  const auto* signs = rhyme_signs(open_rhyme);
  if (!signs) return false;
  std::vector<char32_t> probe = *signs;
  probe.push_back(letter_codepoint(first_killer_base));
  probe.push_back(kAsat);
  for (const auto& [key, rendering] : rhymes_)
    if (rendering == probe) return true;
  return false;
}

// ---------------------------------------------------------------------------
// validity

bool syllable_valid(const BurmeseSyllable& s, const ScriptTable& t) {
  if (s.literal_override) return !s.literal_override->empty();
  if (s.onset.base == Letter::NullA && !s.onset.medials.empty()) return false;
  if (!t.rhyme_valid(s.rhyme)) return false;
  if (s.rhyme.ending == Ending::Glottal && s.rhyme.tone != Tone::Low) return false;
  for (std::size_t i = 0; i < s.killer_coda.size(); ++i) {
    const auto& k = s.killer_coda[i];
    if (k.stacked && (i + 1 != s.killer_coda.size() || !k.medials.empty())) return false;
  }
  if (!s.killer_coda.empty()) {
    const auto& first = s.killer_coda.front();
    if (!first.stacked && first.medials.empty() && t.killer_collides(s.rhyme, first.base))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// compose

namespace {

void render_syllable(const BurmeseSyllable& s, const ScriptTable& t, std::string& out) {
  if (s.literal_override) {
    out += *s.literal_override;
    return;
  }
  utf8::append(out, letter_codepoint(s.onset.base));
  s.onset.medials.for_each([&](Medial m) { utf8::append(out, medial_codepoint(m)); });
  const auto* signs = t.rhyme_signs(s.rhyme);
  const bool tall = t.takes_tall_aa(s.onset.base) && s.onset.medials.empty();
  for (char32_t cp : *signs) utf8::append(out, cp == kAa && tall ? kTallAa : cp);
  for (const auto& k : s.killer_coda) {
    utf8::append(out, letter_codepoint(k.base));
    k.medials.for_each([&](Medial m) { utf8::append(out, medial_codepoint(m)); });
    utf8::append(out, k.stacked ? kVirama : kAsat);
  }
}

}  // namespace

std::string compose(const std::vector<BurmeseSyllable>& syllables, const ScriptTable& t) {
  std::string out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    const auto& s = syllables[i];
    if (!syllable_valid(s, t))
      throw InvalidSyllable("syllable " + std::to_string(i) + " is not composable");
    const bool ends_stacked = !s.literal_override && !s.killer_coda.empty() &&
                              s.killer_coda.back().stacked;
    if (ends_stacked) {
      if (i + 1 >= syllables.size() || syllables[i + 1].literal_override ||
          !syllables[i + 1].onset.is_stacked)
        throw InvalidSyllable("stacked coda at syllable " + std::to_string(i) +
                              " needs a following stacked onset");
    }
    if (!s.literal_override && s.onset.is_stacked) {
      const bool linked = i > 0 && !syllables[i - 1].literal_override &&
                          !syllables[i - 1].killer_coda.empty() &&
                          syllables[i - 1].killer_coda.back().stacked;
      if (!linked)
        throw InvalidSyllable("stacked onset at syllable " + std::to_string(i) +
                              " has no preceding stack");
    }
    render_syllable(s, t, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// decompose

namespace {

struct RhymePattern {
  std::vector<char32_t> seq;  // sequence to match (may be an accepted variant)
  Rhyme rhyme;
};

// Accepted variants per canonical rendering: tall-aa spelling and the
// asat-before-dot mark order; compose always emits the canonical form.
std::vector<std::vector<char32_t>> rendering_variants(const std::vector<char32_t>& canonical) {
  std::vector<std::vector<char32_t>> variants{canonical};
  auto aa = std::find(canonical.begin(), canonical.end(), kAa);
  if (aa != canonical.end()) {
    auto v = canonical;
    v[aa - canonical.begin()] = kTallAa;
    variants.push_back(std::move(v));
  }
  std::size_t base = variants.size();
  for (std::size_t i = 0; i < base; ++i) {
    const auto& v = variants[i];
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] == kDotBelow && v[j + 1] == kAsat) {
        auto w = v;
        std::swap(w[j], w[j + 1]);
        variants.push_back(std::move(w));
      }
    }
  }
  return variants;
}

const std::vector<RhymePattern>& rhyme_patterns(const ScriptTable& t) {
  struct Cache {
    const ScriptTable* table;
    std::vector<RhymePattern> patterns;
  };
  static thread_local Cache cache{nullptr, {}};
  if (cache.table == &t) return cache.patterns;
  cache.patterns.clear();

  struct Raw {
    std::uint32_t key;
    std::vector<char32_t> signs;
  };
  // Walk every stored rhyme through the builder-visible map via rhyme_signs.
  for (int n = 0; n < 12; ++n)
    for (int e = 0; e < 3; ++e)
      for (int to = 0; to < 3; ++to)
        for (int sp = 0; sp < 4; ++sp) {
          Rhyme r{static_cast<Nucleus>(n), static_cast<Ending>(e), static_cast<Tone>(to),
                  static_cast<FinalSpelling>(sp)};
          const auto* signs = t.rhyme_signs(r);
          if (!signs) continue;
          for (auto& v : rendering_variants(*signs)) cache.patterns.push_back({std::move(v), r});
        }
  std::stable_sort(cache.patterns.begin(), cache.patterns.end(),
                   [](const RhymePattern& a, const RhymePattern& b) {
                     return a.seq.size() > b.seq.size();
                   });
  cache.table = &t;
  return cache.patterns;
}

}  // namespace

std::vector<BurmeseSyllable> decompose(std::string_view text, const ScriptTable& t) {
  std::vector<char32_t> cps;
  std::vector<std::size_t> offsets;  // byte offset of each codepoint
  {
    std::size_t pos = 0;
    while (pos < text.size()) {
      offsets.push_back(pos);
      cps.push_back(utf8::decode_at(text, pos));
    }
    offsets.push_back(text.size());
  }
  const auto& patterns = rhyme_patterns(t);
  std::vector<BurmeseSyllable> out;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  auto fail = [&](std::size_t at, const std::string& why) {
    throw UnparseableText(why + " at byte " + std::to_string(offsets[at]), offsets[at]);
  };

  while (i < n) {
    if (t.is_independent_vowel(cps[i])) {
      BurmeseSyllable s;
      std::string lit;
      utf8::append(lit, cps[i]);
      s.literal_override = lit;
      out.push_back(std::move(s));
      ++i;
      continue;
    }
    auto letter = letter_from_codepoint(cps[i]);
    if (!letter) fail(i, "expected a consonant letter");

    BurmeseSyllable syl;
    if (i + 1 < n && cps[i + 1] == kVirama) {
      // stacked pair: this letter is the previous syllable's coda
      if (out.empty()) fail(i, "stacking sign with no preceding syllable");
      if (out.back().literal_override) fail(i, "stacking sign after a literal syllable");
      out.back().killer_coda.push_back({*letter, {}, true});
      i += 2;
      if (i >= n) fail(i - 1, "stacking sign at end of text");
      letter = letter_from_codepoint(cps[i]);
      if (!letter) fail(i, "expected a letter under the stacking sign");
      syl.onset.is_stacked = true;
    }
    syl.onset.base = *letter;
    ++i;

    char32_t last_medial = 0;
    while (i < n && cps[i] >= kMedialFirst && cps[i] <= kMedialLast) {
      if (cps[i] <= last_medial) fail(i, "medial signs out of order");
      last_medial = cps[i];
      syl.onset.medials.add(static_cast<Medial>(cps[i] - kMedialFirst));
      ++i;
    }

    bool matched = false;
    for (const auto& p : patterns) {
      if (p.seq.size() > n - i) continue;
      if (std::equal(p.seq.begin(), p.seq.end(), cps.begin() + i)) {
        syl.rhyme = p.rhyme;
        i += p.seq.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      syl.rhyme = Rhyme{};  // bare letter, inherent vowel
    }

    // killer letters: letter (+medials) + asat
    while (i < n) {
      auto kl = letter_from_codepoint(cps[i]);
      if (!kl) break;
      std::size_t j = i + 1;
      MedialSet meds;
      char32_t last = 0;
      while (j < n && cps[j] >= kMedialFirst && cps[j] <= kMedialLast) {
        if (cps[j] <= last) break;
        last = cps[j];
        meds.add(static_cast<Medial>(cps[j] - kMedialFirst));
        ++j;
      }
      if (j < n && cps[j] == kAsat) {
        syl.killer_coda.push_back({*kl, meds, false});
        i = j + 1;
        continue;
      }
      break;  // next syllable onset (or stack handled on the next loop turn)
    }

    if (i < n && !letter_from_codepoint(cps[i]) && !t.is_independent_vowel(cps[i]))
      fail(i, "unexpected sign");

    out.push_back(std::move(syl));
  }
  return out;
}

// ---------------------------------------------------------------------------
// alignment notation

std::string render_alignment_notation(const std::vector<AlignmentSpan>& alignment,
                                      std::string_view source) {
  std::size_t expect = 0;
  for (const auto& span : alignment) {
    if (span.src_begin != expect || span.src_end < span.src_begin)
      throw GapInAlignment("alignment spans are not contiguous at char " +
                           std::to_string(expect));
    expect = span.src_end;
  }
  if (expect != source.size())
    throw GapInAlignment("alignment does not cover the source (ends at " +
                         std::to_string(expect) + ")");
  std::string out;
  for (const auto& span : alignment) {
    std::string_view src = source.substr(span.src_begin, span.src_end - span.src_begin);
    if (src.empty())
      out += "<>";
    else
      out += std::string(src);
    out += "→";
    switch (span.kind) {
      case FragmentKind::Onset:
        out += span.target_text;
        out += "-";
        break;
      case FragmentKind::Vowel:
        out += "+";
        out += span.target_text;
        break;
      case FragmentKind::Killer:
      case FragmentKind::Literal:
        out += span.target_text;
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace translit
