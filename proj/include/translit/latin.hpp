#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace translit {

enum class GraphemeClass : std::uint8_t { Consonantal, Vocalic, SilentFinalE, AmbiguousY };

struct Grapheme {
  std::string text;  // 1-3 uppercased letters
  GraphemeClass klass = GraphemeClass::Consonantal;
  std::size_t pos = 0;  // char offset in the normalized word
  bool operator==(const Grapheme&) const = default;
};

// Closed multigraph inventory; longest match wins. Single letters are always
// available with their default class. The shipped inventory lives in the
// rule-pack file.
struct GraphemeInventory {
  std::map<std::string, GraphemeClass> multigraphs;
  std::size_t max_len = 1;

  void add(std::string text, GraphemeClass klass) {
    max_len = std::max(max_len, text.size());
    multigraphs.emplace(std::move(text), klass);
  }
};

class NonLatinInput : public std::runtime_error {
 public:
  NonLatinInput(const std::string& what, char offending)
      : std::runtime_error(what), offending_(offending) {}
  char offending() const { return offending_; }

 private:
  char offending_;
};

// Longest-match segmentation. Apostrophes and hyphens are dropped; anything
// else outside A-Za-z raises NonLatinInput.
std::vector<Grapheme> tokenize(std::string_view word, const GraphemeInventory& inv);

enum ChunkFlag : std::uint32_t {
  kWordInitial = 1u << 0,
  kWordFinal = 1u << 1,
  kDoubledFollows = 1u << 2,  // doubled consonant letters (incl. CK) follow the nucleus
  kBeforeR = 1u << 3,
  kBeforeL = 1u << 4,
  kSilentEFinal = 1u << 5,
  kSyllabicR = 1u << 6,
  kSyllabicL = 1u << 7,
  kHiatusStart = 1u << 8,
  kNasalFollows = 1u << 9,  // next chunk starts with a single nasal onset
};

struct LatinChunk {
  std::vector<Grapheme> onset;
  std::vector<Grapheme> nucleus;
  std::vector<Grapheme> coda;
  std::vector<Grapheme> elided;  // silent / syncopated letters (kept for losslessness)
  std::uint32_t flags = 0;
  std::size_t src_begin = 0;  // char span in the normalized word
  std::size_t src_end = 0;

  bool has(ChunkFlag f) const { return flags & f; }
};

// Onset cluster whitelist: "+"-joined grapheme texts (e.g. "T+R"). Single
// consonants are always legal onsets.
using OnsetWhitelist = std::set<std::string>;

// Groups graphemes into Burmese-sized syllable chunks: maximal onset against
// the whitelist, hiatus splitting, silent-E and doubled-letter flags,
// final -RE/-LE syllabic chunks, unstressed-E syncope before R/L.
std::vector<LatinChunk> chunk(const std::vector<Grapheme>& graphemes,
                              const OnsetWhitelist& whitelist);

std::string chunk_onset_text(const LatinChunk& c);
std::string chunk_nucleus_text(const LatinChunk& c);
std::string chunk_coda_text(const LatinChunk& c);

}  // namespace translit
