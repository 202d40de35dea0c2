#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "translit/latin.hpp"
#include "translit/script.hpp"

namespace translit {

enum class Tier : std::uint8_t { Lexicon = 0, GraphemeOverride = 1, Cluster = 2, Default = 3 };
enum class Position : std::uint8_t { Onset, Nucleus, Coda };

std::string_view tier_name(Tier t);

// One parsed piece of an output fragment. Fragments use the decomposition
// notation: "ခရ-" onset letters, "+ိုင်း" a rhyme, "စ်" a killer letter,
// "ယူ" literal syllables, "0" drop.
struct FragmentPiece {
  enum class Kind : std::uint8_t { Onset, RhymeTemplate, Killer, Literal, Drop };
  Kind kind = Kind::Drop;
  std::vector<OnsetUnit> onset_units;
  Rhyme rhyme;
  MedialSet extra_medials;  // medials the rhyme adds to the carrying onset
  KillerLetter killer;
  std::vector<BurmeseSyllable> literal;
  std::string text;  // rendered notation for alignment output
};

struct RuleOutput {
  std::string raw;
  std::vector<FragmentPiece> pieces;
  int weight = 0;
  bool self_onset = false;  // first piece supplies its own onset letters
};

struct RewriteRule {
  Tier tier = Tier::Default;
  Position pos = Position::Onset;
  std::vector<std::string> pattern;  // grapheme texts; {"_"} matches an empty slot
  std::vector<std::string> context;  // predicate names, '!' negates; empty = always
  std::vector<RuleOutput> outputs;
  std::string id;  // tier:pattern:context
};

struct LexiconEntry {
  std::string source;  // uppercased
  std::string target;
  std::string note;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DuplicateRule : public std::runtime_error {
 public:
  explicit DuplicateRule(const std::string& what) : std::runtime_error(what) {}
};

class InvalidFragment : public std::runtime_error {
 public:
  explicit InvalidFragment(const std::string& what) : std::runtime_error(what) {}
};

class NoRuleApplicable : public std::runtime_error {
 public:
  NoRuleApplicable(const std::string& what, std::string chunk_text)
      : std::runtime_error(what), chunk_text_(std::move(chunk_text)) {}
  const std::string& chunk_text() const { return chunk_text_; }

 private:
  std::string chunk_text_;
};

class RuleSet {
 public:
  // Rule-pack line format: tier TAB pattern@pos TAB context TAB outputs TAB weights.
  // `grapheme` and `onset` lines define the multigraph inventory and the
  // syllabifier's legal-cluster whitelist.
  static RuleSet load(const std::string& rule_pack_path);
  static RuleSet parse(std::string_view text, std::string_view origin,
                       const ScriptTable& table = ScriptTable::builtin());

  void load_lexicon(const std::string& path);
  void parse_lexicon(std::string_view text, std::string_view origin);

  void add_rule(RewriteRule rule);
  bool ablate(std::string_view rule_id);  // removes a rule; true if found

  const GraphemeInventory& inventory() const { return inventory_; }
  const OnsetWhitelist& onset_whitelist() const { return whitelist_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::map<std::string, LexiconEntry>& lexicon() const { return lexicon_; }

  void set_lexicon_enabled(bool on) { lexicon_enabled_ = on; }
  bool lexicon_enabled() const { return lexicon_enabled_; }

  const ScriptTable& script() const { return *script_; }

  std::size_t rule_count() const { return rules_.size(); }

 private:
  GraphemeInventory inventory_;
  OnsetWhitelist whitelist_;
  std::vector<RewriteRule> rules_;
  std::map<std::string, LexiconEntry> lexicon_;
  bool lexicon_enabled_ = true;
  const ScriptTable* script_ = &ScriptTable::builtin();
};

struct Candidate {
  std::vector<BurmeseSyllable> syllables;
  std::string text;  // composed target
  int score = 0;
  std::vector<AlignmentSpan> alignment;
  std::vector<std::string> rule_trace;
  bool from_lexicon = false;
};

// Top-k candidates ordered by (score, target text); lexicon hits first.
std::vector<Candidate> transliterate(std::string_view word, const RuleSet& rs, int k);

std::string explain(const Candidate& c, std::string_view word);

// Recomputes a candidate's score from its rule trace (for audits/tests).
int score_from_trace(const std::vector<std::string>& trace, const RuleSet& rs);

}  // namespace translit
