#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsetlin/clause.hpp"
#include "tsetlin/corpus.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

enum class FeedbackKind { TypeI, TypeII };

struct HyperParams {
  std::uint32_t clauses_per_class = 10;   // m, even: m/2 per polarity
  std::uint32_t states_per_action = 100;  // N
  double specificity = 3.9;               // s
  std::int32_t threshold = 10;            // T
  std::uint32_t epochs = 100;
  std::uint64_t seed = 42;

  void validate() const;
};

// Probability that a clause is activated for feedback at vote sum f:
// TypeI (T - clamp(f, -T, T)) / 2T, TypeII (T + clamp(f, -T, T)) / 2T.
double feedback_activation_probability(std::int64_t vote_sum,
                                       std::int32_t threshold,
                                       FeedbackKind kind);

struct EpochRecord {
  std::uint32_t epoch = 0;
  std::optional<double> train_accuracy;
  std::optional<double> test_accuracy;
  std::uint64_t clause_activations = 0;
  double seconds = 0.0;
};

struct TrainingHistory {
  std::vector<EpochRecord> epochs;
};

// One binary clause pool: m clauses over k features, voting for (+) or
// against (-) a single category.
class TsetlinMachine {
 public:
  TsetlinMachine(std::uint32_t num_features, const HyperParams& params,
                 const Rng& stream);

  std::uint32_t num_features() const { return k_; }
  const HyperParams& params() const { return params_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  Clause& clause(std::size_t i) { return clauses_[i]; }

  // Positive-polarity firings minus negative-polarity firings.
  std::int64_t vote_sum(const BitVector& x, EvalMode mode) const;

  // 1 iff vote_sum in Inference mode is strictly positive.
  int classify(const BitVector& x) const;

  // One game round: clamped learning-mode vote sum gates per-clause
  // activation; activated clauses get Type I or Type II feedback by
  // (y, polarity). Returns the number of activated clauses.
  std::size_t train_example(const BitVector& x, int y, bool parallel = false);

 private:
  std::vector<bool> clause_outputs(const BitVector& x, EvalMode mode) const;

  std::uint32_t k_;
  HyperParams params_;
  std::vector<Clause> clauses_;
  std::vector<Rng> clause_rngs_;
};

struct FitOptions {
  bool track_train_accuracy = false;
  const Corpus* eval_each_epoch = nullptr;
  bool parallel = false;
  std::function<void(const EpochRecord&)> on_epoch;  // optional progress hook
};

// One clause pool per class; trains target class positive plus one
// uniformly sampled non-target class negative per example; predicts by
// argmax of per-class vote sums (ties to the lowest ordinal).
class MultiClassTsetlinMachine {
 public:
  MultiClassTsetlinMachine(std::uint32_t num_features,
                           std::vector<std::string> class_labels,
                           const HyperParams& params);

  std::uint32_t num_features() const { return k_; }
  const HyperParams& params() const { return params_; }
  const std::vector<std::string>& class_labels() const { return labels_; }
  std::size_t num_classes() const { return labels_.size(); }
  const TsetlinMachine& machine(std::size_t c) const { return machines_[c]; }
  TsetlinMachine& machine(std::size_t c) { return machines_[c]; }

  std::vector<std::int64_t> vote_sums(const BitVector& x,
                                      EvalMode mode = EvalMode::Inference) const;
  int classify(const BitVector& x) const;

  std::size_t train_example(const BitVector& x, int label,
                            bool parallel = false);

  TrainingHistory fit(const Corpus& train, const FitOptions& opts = {});

  double accuracy(const Corpus& corpus) const;

 private:
  std::uint32_t k_;
  HyperParams params_;
  std::vector<std::string> labels_;
  std::vector<TsetlinMachine> machines_;
  Rng shuffle_rng_;
  Rng negative_class_rng_;
};

}  // namespace tsetlin
