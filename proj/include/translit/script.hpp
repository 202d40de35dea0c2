#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace translit {

// The 33 consonant letters plus the null-onset letter. Enum order follows
// the Unicode block, so codepoint(l) = 0x1000 + index.
enum class Letter : std::uint8_t {
  Ka, Kha, Ga, Gha, Nga,
  Ca, Cha, Ja, Jha, Nya, Nnya,
  Tta, Ttha, Dda, Ddha, Nna,
  Ta, Tha, Da, Dha, Na,
  Pa, Pha, Ba, Bha, Ma,
  Ya, Ra, La, Wa, Sa, Ha, Lla,
  NullA,  // အ
};

constexpr int kLetterCount = 34;
char32_t letter_codepoint(Letter l);
std::optional<Letter> letter_from_codepoint(char32_t cp);
std::string_view letter_name(Letter l);
std::optional<Letter> letter_from_name(std::string_view name);

enum class Medial : std::uint8_t { Ya = 0, Ra = 1, Wa = 2, Ha = 3 };

// Ordered set of medial signs; iteration order is the canonical storage
// order ya < ra < wa < ha.
class MedialSet {
 public:
  MedialSet() = default;
  void add(Medial m) { bits_ |= mask(m); }
  bool has(Medial m) const { return bits_ & mask(m); }
  bool empty() const { return bits_ == 0; }
  bool operator==(const MedialSet&) const = default;
  auto operator<=>(const MedialSet&) const = default;
  std::uint8_t raw() const { return bits_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < 4; ++i)
      if (bits_ & (1u << i)) fn(static_cast<Medial>(i));
  }

 private:
  static std::uint8_t mask(Medial m) { return static_cast<std::uint8_t>(1u << static_cast<int>(m)); }
  std::uint8_t bits_ = 0;
};

char32_t medial_codepoint(Medial m);

enum class Nucleus : std::uint8_t { Schwa, A, I, U, E, Eh, O, Aw, Ai, Au, Ei, Ou };
enum class Ending : std::uint8_t { Open, Nasal, Glottal };
enum class Tone : std::uint8_t { Low, High, Creaky };

// Spelling of the rhyme-final consonant. Burmese writes the same nasalized
// rhyme with different letters (န်/မ်/ံ) and checked rhymes with တ် or ပ်;
// loanword spellings pick the letter matching the source coda.
enum class FinalSpelling : std::uint8_t { Conventional, Ma, Pa, Anusvara };

struct Rhyme {
  Nucleus nucleus = Nucleus::Schwa;
  Ending ending = Ending::Open;
  Tone tone = Tone::Low;
  FinalSpelling spelling = FinalSpelling::Conventional;
  bool operator==(const Rhyme&) const = default;
  auto operator<=>(const Rhyme&) const = default;
};

struct OnsetUnit {
  Letter base = Letter::NullA;
  MedialSet medials;
  bool is_stacked = false;  // written under the previous syllable's coda letter
  bool operator==(const OnsetUnit&) const = default;
  auto operator<=>(const OnsetUnit&) const = default;
};

// One coda letter carrying the inherent-vowel killer (asat), e.g. the ဘ် of
// ဝက်ဘ်. `stacked` renders via the stacking sign instead of asat and requires
// the following syllable to be marked is_stacked.
struct KillerLetter {
  Letter base = Letter::Ka;
  MedialSet medials;
  bool stacked = false;
  bool operator==(const KillerLetter&) const = default;
  auto operator<=>(const KillerLetter&) const = default;
};

struct BurmeseSyllable {
  OnsetUnit onset;
  Rhyme rhyme;
  std::vector<KillerLetter> killer_coda;
  // Lexicon entries with irregular spellings (independent vowel letters etc.)
  // bypass composition entirely.
  std::optional<std::string> literal_override;
  bool operator==(const BurmeseSyllable&) const = default;
};

class InvalidSyllable : public std::runtime_error {
 public:
  explicit InvalidSyllable(const std::string& what) : std::runtime_error(what) {}
};

class UnparseableText : public std::runtime_error {
 public:
  UnparseableText(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class GapInAlignment : public std::runtime_error {
 public:
  explicit GapInAlignment(const std::string& what) : std::runtime_error(what) {}
};

// Letter/rhyme tables. The default tables are compiled in; the same content
// ships as data/burmese_script.tsv (kind TAB key TAB codepoints-hex) so the
// inventory can be inspected and versioned without rebuilding.
class ScriptTable {
 public:
  static const ScriptTable& builtin();
  static ScriptTable load(const std::string& path);
  static ScriptTable parse(std::string_view text, std::string_view origin);

  int version = 0;

  // rhyme renderings keyed by (nucleus, ending, tone, spelling); glottal
  // rhymes are stored under Tone::Low only.
  const std::vector<char32_t>* rhyme_signs(const Rhyme& r) const;
  bool rhyme_valid(const Rhyme& r) const;

  // letters that take the tall variant of the aa sign when unmedialed
  bool takes_tall_aa(Letter l) const { return tall_aa_[static_cast<int>(l)]; }

  bool is_independent_vowel(char32_t cp) const;

  struct FinalMergeKey {
    std::vector<char32_t> vowel_signs;  // signs seen before the final letter
    char32_t final_letter = 0;          // 0 = pure-sign rhyme
    bool operator<(const FinalMergeKey& o) const {
      if (vowel_signs != o.vowel_signs) return vowel_signs < o.vowel_signs;
      return final_letter < o.final_letter;
    }
  };
  struct FinalMergeValue {
    Nucleus nucleus;
    Ending ending;
    FinalSpelling spelling;
    bool tone_markable;  // nasal rhymes take ့/း after the asat
  };
  const std::map<FinalMergeKey, FinalMergeValue>& final_index() const { return final_index_; }

  // true when an open rhyme rendered as `signs` followed directly by killer
  // letter `first` would be re-read as a native rhyme-final; such syllables
  // are not composable.
  bool killer_collides(const Rhyme& open_rhyme, Letter first_killer_base) const;

 private:
  friend struct ScriptTableBuilder;
  std::map<std::uint32_t, std::vector<char32_t>> rhymes_;
  std::map<FinalMergeKey, FinalMergeValue> final_index_;
  std::array<bool, kLetterCount> tall_aa_{};
  std::vector<char32_t> independent_vowels_;
};

// Structural validity: enum domains, nucleus/ending restrictions, killer
// collision rules, null-onset medial restriction.
bool syllable_valid(const BurmeseSyllable& s, const ScriptTable& t = ScriptTable::builtin());

std::string compose(const std::vector<BurmeseSyllable>& syllables,
                    const ScriptTable& t = ScriptTable::builtin());
std::vector<BurmeseSyllable> decompose(std::string_view text,
                                       const ScriptTable& t = ScriptTable::builtin());

// Alignment between a Latin source word and a composed target, as produced
// by the rule engine: one span per rule application.
enum class FragmentKind : std::uint8_t { Onset, Vowel, Killer, Literal };

struct AlignmentSpan {
  std::size_t src_begin = 0;  // char offsets into the (uppercased) source
  std::size_t src_end = 0;
  FragmentKind kind = FragmentKind::Literal;
  std::string target_text;  // rendered fragment (letters+medials, or signs)
};

// Renders the two-column decomposition notation: onset consonants suffixed
// "-", vowel-sign fragments prefixed "+", a bare inherent vowel as "+".
std::string render_alignment_notation(const std::vector<AlignmentSpan>& alignment,
                                      std::string_view source);

}  // namespace translit
