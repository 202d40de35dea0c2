#include "translit/latin.hpp"

#include <algorithm>
#include <cctype>

namespace translit {

namespace {

bool is_vowel_letter(char c) {
  return c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U';
}

std::string join_texts(const std::vector<Grapheme>& gs, std::size_t begin, std::size_t end,
                       const char* sep) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += sep;
    out += gs[i].text;
  }
  return out;
}

}  // namespace

std::vector<Grapheme> tokenize(std::string_view word, const GraphemeInventory& inv) {
  std::string upper;
  upper.reserve(word.size());
  for (char c : word) {
    if (c == '\'' || c == '-') continue;
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw NonLatinInput(std::string("non-Latin character '") + c + "' in input", c);
    upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  std::vector<Grapheme> out;
  std::size_t pos = 0;
  while (pos < upper.size()) {
    std::size_t best = 1;
    GraphemeClass klass;
    bool found = false;
    const std::size_t limit = std::min(inv.max_len, upper.size() - pos);
    for (std::size_t len = limit; len >= 2; --len) {
      auto it = inv.multigraphs.find(upper.substr(pos, len));
      if (it != inv.multigraphs.end()) {
        best = len;
        klass = it->second;
        found = true;
        break;
      }
    }
    if (!found) {
      char c = upper[pos];
      if (auto it = inv.multigraphs.find(std::string(1, c)); it != inv.multigraphs.end())
        klass = it->second;
      else if (is_vowel_letter(c))
        klass = GraphemeClass::Vocalic;
      else if (c == 'Y')
        klass = GraphemeClass::AmbiguousY;
      else
        klass = GraphemeClass::Consonantal;
    }
    out.push_back({upper.substr(pos, best), klass, pos});
    pos += best;
  }
  return out;
}

std::string chunk_onset_text(const LatinChunk& c) { return join_texts(c.onset, 0, c.onset.size(), ""); }
std::string chunk_nucleus_text(const LatinChunk& c) {
  return join_texts(c.nucleus, 0, c.nucleus.size(), "");
}
std::string chunk_coda_text(const LatinChunk& c) { return join_texts(c.coda, 0, c.coda.size(), ""); }

namespace {

struct WorkGrapheme {
  Grapheme g;
  bool vowel = false;
  bool silent = false;
};

bool whitelisted(const std::vector<WorkGrapheme>& gs, std::size_t begin, std::size_t end,
                 const OnsetWhitelist& wl) {
  if (end - begin <= 1) return true;
  std::string key;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) key += "+";
    key += gs[i].g.text;
  }
  return wl.count(key) > 0;
}

bool is_nasal_text(const std::string& t) { return t == "M" || t == "N" || t == "NG"; }
bool is_liquid_text(const std::string& t) { return t == "R" || t == "L"; }

}  // namespace

std::vector<LatinChunk> chunk(const std::vector<Grapheme>& graphemes,
                              const OnsetWhitelist& whitelist) {
  std::vector<WorkGrapheme> gs;
  gs.reserve(graphemes.size());
  for (const auto& g : graphemes) gs.push_back({g, false, false});
  const std::size_t n = gs.size();

  // resolve ambiguous Y: vocalic unless word-initial or intervocalic
  for (std::size_t i = 0; i < n; ++i) {
    auto& w = gs[i];
    if (w.g.klass == GraphemeClass::Vocalic) {
      w.vowel = true;
    } else if (w.g.klass == GraphemeClass::AmbiguousY) {
      bool prev_vowel = i > 0 && gs[i - 1].vowel;
      bool next_vowelish =
          i + 1 < n && (gs[i + 1].g.klass == GraphemeClass::Vocalic ||
                        gs[i + 1].g.klass == GraphemeClass::AmbiguousY);
      w.vowel = !(i == 0 || (prev_vowel && next_vowelish));
    }
  }

  // silent final E: trailing E after a consonant, with another vowel present
  if (n >= 2 && gs[n - 1].g.text == "E" && !gs[n - 2].vowel) {
    bool other_vowel = false;
    for (std::size_t i = 0; i + 1 < n; ++i) other_vowel |= gs[i].vowel;
    if (other_vowel) {
      gs[n - 1].silent = true;
      gs[n - 1].vowel = false;
      gs[n - 1].g.klass = GraphemeClass::SilentFinalE;
    }
  }

  std::vector<std::size_t> nuclei;
  for (std::size_t i = 0; i < n; ++i)
    if (gs[i].vowel) nuclei.push_back(i);

  std::vector<LatinChunk> chunks;
  auto push_graphemes = [&](std::vector<Grapheme>& dst, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) dst.push_back(gs[i].g);
  };

  if (nuclei.empty()) {
    LatinChunk c;
    for (std::size_t i = 0; i < n; ++i) {
      if (gs[i].silent)
        c.elided.push_back(gs[i].g);
      else
        c.onset.push_back(gs[i].g);
    }
    c.flags |= kWordInitial | kWordFinal;
    if (!c.onset.empty() && c.onset.back().text == "R") c.flags |= kSyllabicR;
    if (!c.onset.empty() && c.onset.back().text == "L") c.flags |= kSyllabicL;
    if (c.flags & (kSyllabicR | kSyllabicL)) {
      c.coda.push_back(c.onset.back());
      c.onset.pop_back();
    }
    chunks.push_back(std::move(c));
  } else {
    // onset start index for each nucleus chunk
    std::vector<std::size_t> onset_start(nuclei.size());
    onset_start[0] = 0;
    for (std::size_t k = 1; k < nuclei.size(); ++k) {
      std::size_t run_begin = nuclei[k - 1] + 1;
      std::size_t run_end = nuclei[k];
      // maximal onset: longest whitelisted suffix of the consonant run
      std::size_t best = run_end;  // empty onset (true hiatus)
      for (std::size_t s = run_begin; s < run_end; ++s) {
        if (whitelisted(gs, s, run_end, whitelist)) {
          best = s;
          break;
        }
      }
      onset_start[k] = best;
    }

    for (std::size_t k = 0; k < nuclei.size(); ++k) {
      LatinChunk c;
      std::size_t onset_begin = onset_start[k];
      std::size_t nucleus_at = nuclei[k];
      std::size_t tail_end = (k + 1 < nuclei.size()) ? onset_start[k + 1] : n;
      push_graphemes(c.onset, onset_begin, nucleus_at);
      c.nucleus.push_back(gs[nucleus_at].g);
      for (std::size_t i = nucleus_at + 1; i < tail_end; ++i) {
        if (gs[i].silent)
          c.elided.push_back(gs[i].g);
        else
          c.coda.push_back(gs[i].g);
      }
      if (k == 0) c.flags |= kWordInitial;
      if (k + 1 == nuclei.size()) c.flags |= kWordFinal;
      if (gs.back().silent && k + 1 == nuclei.size()) c.flags |= kSilentEFinal;
      if (c.onset.empty() && k > 0) c.flags |= kHiatusStart;
      chunks.push_back(std::move(c));
    }

    // final -RE / -LE: split a syllabic chunk off the last chunk's coda
    {
      LatinChunk& last = chunks.back();
      if (last.has(kSilentEFinal) && last.coda.size() >= 2 &&
          is_liquid_text(last.coda.back().text) &&
          !is_liquid_text(last.coda[last.coda.size() - 2].text) &&
          !is_nasal_text(last.coda[last.coda.size() - 2].text)) {
        LatinChunk extra;
        extra.onset.push_back(last.coda[last.coda.size() - 2]);
        extra.coda.push_back(last.coda.back());
        extra.elided = last.elided;
        last.elided.clear();
        last.coda.resize(last.coda.size() - 2);
        extra.flags |= (extra.coda.back().text == "R") ? kSyllabicR : kSyllabicL;
        extra.flags |= kWordFinal;
        last.flags &= ~(kWordFinal | kSilentEFinal);
        chunks.push_back(std::move(extra));
      }
    }

    // unstressed E syncope: T-E + R... -> TR cluster when whitelisted
    for (std::size_t k = 1; k + 1 < chunks.size(); ++k) {
      LatinChunk& cur = chunks[k];
      LatinChunk& next = chunks[k + 1];
      if (cur.nucleus.size() == 1 && cur.nucleus[0].text == "E" && cur.coda.empty() &&
          !cur.onset.empty() && next.onset.size() == 1 &&
          is_liquid_text(next.onset[0].text)) {
        std::string key = join_texts(cur.onset, 0, cur.onset.size(), "+") + "+" +
                          next.onset[0].text;
        if (whitelist.count(key)) {
          next.onset.insert(next.onset.begin(), cur.onset.begin(), cur.onset.end());
          next.elided.insert(next.elided.begin(), cur.nucleus[0]);
          next.flags |= cur.flags & kWordInitial;
          chunks.erase(chunks.begin() + static_cast<std::ptrdiff_t>(k));
          --k;
        }
      }
    }

    // doubled consonants across a boundary (incl. CK) and nasal-follows
    for (std::size_t k = 0; k + 1 < chunks.size(); ++k) {
      LatinChunk& cur = chunks[k];
      const LatinChunk& next = chunks[k + 1];
      if (next.onset.empty()) continue;
      const std::string& first = next.onset.front().text;
      if (!cur.coda.empty() && cur.coda.back().text == first) cur.flags |= kDoubledFollows;
      if (cur.coda.empty() && first == "CK") cur.flags |= kDoubledFollows;
      if (cur.coda.empty() && !cur.nucleus.empty() && next.onset.size() == 1 &&
          is_nasal_text(first) && !(cur.flags & kDoubledFollows))
        cur.flags |= kNasalFollows;
      if (first == "R") cur.flags |= kBeforeR;
      if (first == "L") cur.flags |= kBeforeL;
    }
    // before_R / before_L inside a cluster onset
    for (auto& c : chunks) {
      for (std::size_t i = 1; i < c.onset.size(); ++i) {
        if (c.onset[i].text == "R") c.flags |= kBeforeR;
        if (c.onset[i].text == "L") c.flags |= kBeforeL;
      }
    }
  }

  // char spans
  for (auto& c : chunks) {
    std::size_t lo = std::string::npos, hi = 0;
    auto scan = [&](const std::vector<Grapheme>& v) {
      for (const auto& g : v) {
        lo = std::min(lo, g.pos);
        hi = std::max(hi, g.pos + g.text.size());
      }
    };
    scan(c.onset);
    scan(c.nucleus);
    scan(c.coda);
    scan(c.elided);
    c.src_begin = lo == std::string::npos ? 0 : lo;
    c.src_end = hi;
  }
  return chunks;
}

}  // namespace translit
