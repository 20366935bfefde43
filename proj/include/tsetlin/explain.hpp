#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsetlin/machine.hpp"
#include "tsetlin/text.hpp"

namespace tsetlin {

enum class RulePolarity { For, Against };

// A clause rendered as a human-readable rule.
struct Rule {
  std::string class_label;
  RulePolarity polarity = RulePolarity::For;
  std::vector<std::pair<std::string, bool>> terms;  // (term, negated)
  std::optional<std::uint64_t> support;             // firings on a reference corpus

  std::string to_string() const;
};

enum class RuleFormat { Text, Json };

Rule clause_to_rule(const Clause& clause, const Vocabulary& vocab,
                    const std::string& class_label);

// Renders all rules per class (or the top_n by support when a
// reference corpus is given). Support counts inference-mode firings.
std::string export_rules(const MultiClassTsetlinMachine& machine,
                         const Vocabulary& vocab,
                         const Corpus* reference = nullptr,
                         RuleFormat format = RuleFormat::Text,
                         std::optional<std::size_t> top_n = std::nullopt);

struct FiredClause {
  Rule rule;
  std::int64_t contribution;  // +1 or -1
};

struct ClassBreakdown {
  std::string class_label;
  std::int64_t vote_sum = 0;
  std::vector<FiredClause> fired;
};

// Per-class vote breakdown for one document: every fired clause with
// its rule string; contributions sum to each class's vote sum exactly.
struct PredictionExplanation {
  std::vector<ClassBreakdown> classes;
  int predicted_class = 0;

  std::string to_string() const;
  std::string to_json() const;
};

PredictionExplanation explain_prediction(const MultiClassTsetlinMachine& machine,
                                         const Vocabulary& vocab,
                                         const std::string& text,
                                         const TokenizerConfig& cfg);

PredictionExplanation explain_prediction(const MultiClassTsetlinMachine& machine,
                                         const Vocabulary& vocab,
                                         const BitVector& bits);

}  // namespace tsetlin
