#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "translit/pinyin.hpp"
#include "translit/rules.hpp"

namespace translit {

struct CorpusEntry {
  std::string source;
  std::string target;
  char origin = 'M';  // dictionary [M] or web [W]
  std::string lang = "en";
  std::set<std::string> flags;  // verify, lexicon, modern_killer_style

  bool excluded() const { return flags.count("verify") > 0; }
};

class InvalidTarget : public std::runtime_error {
 public:
  InvalidTarget(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// TSV columns: source TAB target TAB origin TAB lang [TAB flags]; `#`
// comments. Unflagged targets must decompose.
std::vector<CorpusEntry> load_corpus(const std::string& path,
                                     const ScriptTable& table = ScriptTable::builtin());
std::vector<CorpusEntry> parse_corpus(std::string_view text, std::string_view origin,
                                      const ScriptTable& table = ScriptTable::builtin());

struct EvalOptions {
  int k = 3;
  bool parallel = false;  // OpenMP fan-out over entries
};

struct Report {
  int total = 0;      // loaded entries
  int evaluated = 0;  // minus verify-flagged
  int top1_hits = 0;
  int topk_hits = 0;
  double syllable_accuracy = 0.0;  // mean per-entry fraction

  struct Failure {
    std::string source;
    std::string target;
    std::vector<std::string> top_texts;
    std::vector<std::string> rule_ids;  // trace of the best candidate
  };
  std::vector<Failure> failures;

  double top1() const { return evaluated ? double(top1_hits) / evaluated : 0.0; }
  double topk() const { return evaluated ? double(topk_hits) / evaluated : 0.0; }

  std::string to_text() const;
  std::string to_tsv() const;
};

// Deterministic evaluation; the parallel path fans out per entry and reduces
// in corpus order, so serial and parallel reports are byte-identical.
Report evaluate(const std::vector<CorpusEntry>& corpus, const RuleSet& rules,
                const PinyinTable& pinyin, const EvalOptions& opts = {});

// Serial reference implementation (kept for testing the parallel path).
Report evaluate_serial(const std::vector<CorpusEntry>& corpus, const RuleSet& rules,
                       const PinyinTable& pinyin, int k = 3);

}  // namespace translit
