#include "tsetlin/explain.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tsetlin {

std::string Rule::to_string() const {
  std::ostringstream out;
  out << "IF ";
  if (terms.empty()) {
    out << "(empty)";
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out << " AND ";
      if (terms[i].second) out << "NOT ";
      out << terms[i].first;
    }
  }
  out << " THEN " << (polarity == RulePolarity::For ? "FOR " : "AGAINST ")
      << class_label;
  if (support) out << "  [support=" << *support << "]";
  return out.str();
}

Rule clause_to_rule(const Clause& clause, const Vocabulary& vocab,
                    const std::string& class_label) {
  if (clause.num_features() != vocab.size())
    throw std::invalid_argument("clause width does not match vocabulary");
  Rule rule;
  rule.class_label = class_label;
  rule.polarity =
      clause.polarity() > 0 ? RulePolarity::For : RulePolarity::Against;
  for (const Literal& lit : clause.included_literals())
    rule.terms.emplace_back(vocab.term(lit.feature_index), lit.negated);
  return rule;
}

namespace {

nlohmann::json rule_to_json(const Rule& rule) {
  nlohmann::json literals = nlohmann::json::array();
  for (const auto& [term, negated] : rule.terms)
    literals.push_back({{"term", term}, {"negated", negated}});
  nlohmann::json j = {
      {"class", rule.class_label},
      {"polarity", rule.polarity == RulePolarity::For ? "for" : "against"},
      {"literals", literals}};
  if (rule.support)
    j["support"] = *rule.support;
  else
    j["support"] = nullptr;
  return j;
}

}  // namespace

std::string export_rules(const MultiClassTsetlinMachine& machine,
                         const Vocabulary& vocab, const Corpus* reference,
                         RuleFormat format, std::optional<std::size_t> top_n) {
  std::vector<std::vector<Rule>> per_class(machine.num_classes());
  for (std::size_t c = 0; c < machine.num_classes(); ++c) {
    const auto& clauses = machine.machine(c).clauses();
    per_class[c].reserve(clauses.size());
    for (const Clause& clause : clauses) {
      Rule rule = clause_to_rule(clause, vocab, machine.class_labels()[c]);
      if (reference) {
        std::uint64_t fired = 0;
        for (const auto& doc : reference->documents)
          if (clause.evaluate(doc.bits, EvalMode::Inference)) ++fired;
        rule.support = fired;
      }
      per_class[c].push_back(std::move(rule));
    }
    if (top_n) {
      if (reference)
        std::stable_sort(per_class[c].begin(), per_class[c].end(),
                         [](const Rule& a, const Rule& b) {
                           return a.support.value_or(0) > b.support.value_or(0);
                         });
      if (per_class[c].size() > *top_n) per_class[c].resize(*top_n);
    }
  }

  if (format == RuleFormat::Json) {
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& cls : per_class)
      for (const Rule& rule : cls) rules.push_back(rule_to_json(rule));
    return nlohmann::json{{"rules", rules}}.dump(2);
  }

  std::ostringstream out;
  out << "# rules (" << machine.num_classes() << " classes, "
      << machine.params().clauses_per_class << " clauses per class)\n";
  for (const auto& cls : per_class)
    for (const Rule& rule : cls) out << rule.to_string() << "\n";
  return out.str();
}

PredictionExplanation explain_prediction(const MultiClassTsetlinMachine& machine,
                                         const Vocabulary& vocab,
                                         const BitVector& bits) {
  PredictionExplanation ex;
  ex.classes.resize(machine.num_classes());
  for (std::size_t c = 0; c < machine.num_classes(); ++c) {
    ClassBreakdown& br = ex.classes[c];
    br.class_label = machine.class_labels()[c];
    for (const Clause& clause : machine.machine(c).clauses()) {
      if (!clause.evaluate(bits, EvalMode::Inference)) continue;
      FiredClause fc;
      fc.rule = clause_to_rule(clause, vocab, br.class_label);
      fc.contribution = clause.polarity();
      br.vote_sum += fc.contribution;
      br.fired.push_back(std::move(fc));
    }
  }
  ex.predicted_class = 0;
  for (std::size_t c = 1; c < ex.classes.size(); ++c)
    if (ex.classes[c].vote_sum > ex.classes[ex.predicted_class].vote_sum)
      ex.predicted_class = static_cast<int>(c);
  return ex;
}

PredictionExplanation explain_prediction(const MultiClassTsetlinMachine& machine,
                                         const Vocabulary& vocab,
                                         const std::string& text,
                                         const TokenizerConfig& cfg) {
  return explain_prediction(machine, vocab, binarize(text, vocab, cfg).bits);
}

std::string PredictionExplanation::to_string() const {
  std::ostringstream out;
  for (const auto& br : classes) {
    out << "class " << br.class_label << ": vote_sum=" << br.vote_sum << "\n";
    for (const auto& fc : br.fired)
      out << "  " << (fc.contribution > 0 ? "+1 " : "-1 ")
          << fc.rule.to_string() << "\n";
  }
  out << "predicted: " << classes[static_cast<std::size_t>(predicted_class)]
                              .class_label
      << "\n";
  return out.str();
}

std::string PredictionExplanation::to_json() const {
  nlohmann::json jclasses = nlohmann::json::array();
  for (const auto& br : classes) {
    nlohmann::json fired = nlohmann::json::array();
    for (const auto& fc : br.fired)
      fired.push_back({{"contribution", fc.contribution},
                       {"rule", rule_to_json(fc.rule)}});
    jclasses.push_back({{"class", br.class_label},
                        {"vote_sum", br.vote_sum},
                        {"fired", fired}});
  }
  return nlohmann::json{
      {"classes", jclasses},
      {"predicted",
       classes[static_cast<std::size_t>(predicted_class)].class_label}}
      .dump(2);
}

}  // namespace tsetlin
