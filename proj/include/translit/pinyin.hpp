#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "translit/rules.hpp"
#include "translit/script.hpp"

namespace translit {

struct PinyinSyllable {
  std::string spelling;  // toneless, lowercased, ü written as v
  std::string initial;   // "" for a true zero initial (a, en, er, ...)
  std::string final_part;
  int tone = 0;  // 0 = unmarked
  std::size_t src_begin = 0, src_end = 0;
  bool operator==(const PinyinSyllable&) const = default;
};

class InvalidPinyin : public std::runtime_error {
 public:
  InvalidPinyin(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Valid-syllable table plus the initial/final/tone mapping tables, in the
// same TSV line format as the rule pack.
class PinyinTable {
 public:
  static PinyinTable load(const std::string& path);
  static PinyinTable parse(std::string_view text, std::string_view origin,
                           const ScriptTable& table = ScriptTable::builtin());

  const std::set<std::string>& valid_syllables() const { return valid_; }

  struct Mapping {
    std::vector<FragmentPiece> pieces;  // alternatives
    std::vector<int> weights;
    std::vector<std::string> raws;
  };
  const Mapping* initial_mapping(const std::string& key) const;
  const Mapping* final_mapping(const std::string& key) const;  // key may be "i@zcs"
  const Mapping* special(const std::string& syllable) const;
  // rhyme for the first-syllable nasal-dropped variant, or nullptr
  const FragmentPiece* dropped_final(const std::string& key) const;
  const std::vector<std::pair<Tone, int>>* tone_mapping(int tone) const;

  const ScriptTable& script() const { return *script_; }

 private:
  std::set<std::string> valid_;
  std::map<std::string, Mapping> initials_;
  std::map<std::string, Mapping> finals_;
  std::map<std::string, Mapping> specials_;
  std::map<std::string, FragmentPiece> dropped_;
  std::map<int, std::vector<std::pair<Tone, int>>> tones_;
  const ScriptTable* script_ = &ScriptTable::builtin();
};

// Greedy longest-match segmentation; apostrophe forces a boundary; tones as
// trailing digits 0-4 or vowel diacritics.
std::vector<PinyinSyllable> parse_pinyin(std::string_view text, const PinyinTable& table);

enum class PinyinMode { PerSyllable, Word };

// Word mode additionally emits the variant with the first syllable's nasal
// ending dropped (for words of two or more syllables).
std::vector<Candidate> pinyin_to_burmese(const std::vector<PinyinSyllable>& syllables,
                                         PinyinMode mode, const PinyinTable& table, int k);

}  // namespace translit
