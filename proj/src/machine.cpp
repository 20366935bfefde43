#include "tsetlin/machine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <execution>
#include <numeric>
#include <stdexcept>

namespace tsetlin {

void HyperParams::validate() const {
  if (clauses_per_class == 0 || clauses_per_class % 2 != 0)
    throw std::invalid_argument("clauses_per_class must be even and positive");
  if (states_per_action == 0 || states_per_action > 32767)
    throw std::invalid_argument("states_per_action must be in [1, 32767]");
  if (specificity < 1.0) throw std::invalid_argument("specificity must be >= 1");
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
}

double feedback_activation_probability(std::int64_t vote_sum,
                                       std::int32_t threshold,
                                       FeedbackKind kind) {
  const double t = static_cast<double>(threshold);
  const double f = std::clamp(static_cast<double>(vote_sum), -t, t);
  return kind == FeedbackKind::TypeI ? (t - f) / (2.0 * t) : (t + f) / (2.0 * t);
}

TsetlinMachine::TsetlinMachine(std::uint32_t num_features,
                               const HyperParams& params, const Rng& stream)
    : k_(num_features), params_(params) {
  params_.validate();
  clauses_.reserve(params.clauses_per_class);
  clause_rngs_.reserve(params.clauses_per_class);
  for (std::uint32_t i = 0; i < params.clauses_per_class; ++i) {
    Rng r = stream.split(i);
    // First ordinal positive, alternating, so each polarity gets m/2.
    clauses_.emplace_back(k_, i % 2 == 0 ? 1 : -1, params.states_per_action, r);
    clause_rngs_.push_back(r);
  }
}

std::vector<bool> TsetlinMachine::clause_outputs(const BitVector& x,
                                                 EvalMode mode) const {
  std::vector<bool> out(clauses_.size());
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    out[i] = clauses_[i].evaluate(x, mode);
  return out;
}

std::int64_t TsetlinMachine::vote_sum(const BitVector& x, EvalMode mode) const {
  std::int64_t sum = 0;
  for (const Clause& c : clauses_)
    if (c.evaluate(x, mode)) sum += c.polarity();
  return sum;
}

int TsetlinMachine::classify(const BitVector& x) const {
  return vote_sum(x, EvalMode::Inference) > 0 ? 1 : 0;
}

std::size_t TsetlinMachine::train_example(const BitVector& x, int y,
                                          bool parallel) {
  const std::vector<bool> outputs = clause_outputs(x, EvalMode::Learning);
  std::int64_t f = 0;
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    if (outputs[i]) f += clauses_[i].polarity();

  const double activation_p = feedback_activation_probability(
      f, params_.threshold, y == 1 ? FeedbackKind::TypeI : FeedbackKind::TypeII);

  std::atomic<std::size_t> activated{0};
  auto update_clause = [&](std::size_t i) {
    Rng& rng = clause_rngs_[i];
    if (!rng.bernoulli(activation_p)) return;
    activated.fetch_add(1, std::memory_order_relaxed);
    Clause& c = clauses_[i];
    const bool wants_type_i = (y == 1) == (c.polarity() > 0);
    if (wants_type_i)
      c.type_i_feedback(x, outputs[i], params_.specificity, rng);
    else
      c.type_ii_feedback(x, outputs[i]);
  };

  std::vector<std::size_t> idx(clauses_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (parallel)
    std::for_each(std::execution::par, idx.begin(), idx.end(), update_clause);
  else
    std::for_each(idx.begin(), idx.end(), update_clause);
  return activated.load();
}

MultiClassTsetlinMachine::MultiClassTsetlinMachine(
    std::uint32_t num_features, std::vector<std::string> class_labels,
    const HyperParams& params)
    : k_(num_features), params_(params), labels_(std::move(class_labels)) {
  params_.validate();
  if (labels_.empty()) throw std::invalid_argument("at least one class required");
  Rng master(params.seed);
  shuffle_rng_ = master.split(0);
  negative_class_rng_ = master.split(1);
  machines_.reserve(labels_.size());
  for (std::size_t c = 0; c < labels_.size(); ++c)
    machines_.emplace_back(k_, params_, master.split(2 + c));
}

std::vector<std::int64_t> MultiClassTsetlinMachine::vote_sums(
    const BitVector& x, EvalMode mode) const {
  std::vector<std::int64_t> sums;
  sums.reserve(machines_.size());
  for (const auto& m : machines_) sums.push_back(m.vote_sum(x, mode));
  return sums;
}

int MultiClassTsetlinMachine::classify(const BitVector& x) const {
  const auto sums = vote_sums(x, EvalMode::Inference);
  int best = 0;
  for (std::size_t c = 1; c < sums.size(); ++c)
    if (sums[c] > sums[best]) best = static_cast<int>(c);  // ties keep lowest
  return best;
}

std::size_t MultiClassTsetlinMachine::train_example(const BitVector& x,
                                                    int label, bool parallel) {
  if (label < 0 || static_cast<std::size_t>(label) >= labels_.size())
    throw std::invalid_argument("label outside the class set");
  std::size_t activated = machines_[label].train_example(x, 1, parallel);
  if (labels_.size() > 1) {
    std::size_t neg = negative_class_rng_.below(labels_.size() - 1);
    if (neg >= static_cast<std::size_t>(label)) ++neg;
    activated += machines_[neg].train_example(x, 0, parallel);
  }
  return activated;
}

double MultiClassTsetlinMachine::accuracy(const Corpus& corpus) const {
  if (corpus.documents.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& doc : corpus.documents) {
    if (!doc.label) throw std::invalid_argument("unlabeled document");
    if (classify(doc.bits) == *doc.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(corpus.size());
}

TrainingHistory MultiClassTsetlinMachine::fit(const Corpus& train,
                                              const FitOptions& opts) {
  if (train.documents.empty()) throw std::invalid_argument("empty corpus");
  for (const auto& doc : train.documents) {
    if (doc.bits.size() != k_)
      throw std::invalid_argument("document width does not match model");
    if (!doc.label || *doc.label < 0 ||
        static_cast<std::size_t>(*doc.label) >= labels_.size())
      throw std::invalid_argument("label outside the class set");
  }

  TrainingHistory history;
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  for (std::uint32_t epoch = 0; epoch < params_.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    shuffle_rng_.shuffle(order.data(), order.size());
    EpochRecord rec;
    rec.epoch = epoch;
    for (std::size_t i : order) {
      const auto& doc = train.documents[i];
      rec.clause_activations += train_example(doc.bits, *doc.label, opts.parallel);
    }
    if (opts.track_train_accuracy) rec.train_accuracy = accuracy(train);
    if (opts.eval_each_epoch) rec.test_accuracy = accuracy(*opts.eval_each_epoch);
    rec.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (opts.on_epoch) opts.on_epoch(rec);
    history.epochs.push_back(std::move(rec));
  }
  return history;
}

}  // namespace tsetlin
