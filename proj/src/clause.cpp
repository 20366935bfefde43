#include "tsetlin/clause.hpp"

#include <cassert>
#include <stdexcept>

namespace tsetlin {

Clause::Clause(std::uint32_t num_features, int polarity,
               std::uint32_t n_states_per_action, Rng& rng)
    : k_(num_features),
      n_(n_states_per_action),
      polarity_(polarity),
      states_(2 * static_cast<std::size_t>(num_features)),
      include_plain_(num_features),
      include_negated_(num_features) {
  if (n_ == 0) throw std::invalid_argument("n_states_per_action must be >= 1");
  if (n_ > 32767)
    throw std::invalid_argument("n_states_per_action must be <= 32767");
  if (polarity != 1 && polarity != -1)
    throw std::invalid_argument("clause polarity must be +1 or -1");
  for (std::size_t pos = 0; pos < states_.size(); ++pos) {
    states_[pos] = static_cast<std::uint16_t>(n_ + rng.below(2));
    if (states_[pos] > n_) {
      std::size_t j = pos >> 1;
      ((pos & 1) ? include_negated_ : include_plain_).set(j);
      ++num_included_;
    }
  }
}

void Clause::check_dims(const BitVector& x) const {
  if (x.size() != k_)
    throw std::invalid_argument("document width does not match clause width");
}

bool Clause::evaluate(const BitVector& x, EvalMode mode) const {
  check_dims(x);
  if (num_included_ == 0) return mode == EvalMode::Learning;
  for (std::size_t w = 0; w < x.num_words(); ++w) {
    std::uint64_t p = include_plain_.word(w);
    if ((p & x.word(w)) != p) return false;
    if (include_negated_.word(w) & x.word(w)) return false;
  }
  return true;
}

std::vector<Literal> Clause::included_literals() const {
  std::vector<Literal> out;
  out.reserve(num_included_);
  for (std::uint32_t j = 0; j < k_; ++j) {
    if (include_plain_.get(j)) out.push_back({j, false});
    if (include_negated_.get(j)) out.push_back({j, true});
  }
  return out;
}

void Clause::bump_up(std::size_t pos) {
  std::uint16_t s = states_[pos];
  if (s >= 2 * n_) return;
  states_[pos] = static_cast<std::uint16_t>(s + 1);
  if (s == n_) {  // crossed the center: literal now included
    std::size_t j = pos >> 1;
    ((pos & 1) ? include_negated_ : include_plain_).set(j);
    ++num_included_;
  }
}

void Clause::bump_down(std::size_t pos) {
  std::uint16_t s = states_[pos];
  if (s <= 1) return;
  states_[pos] = static_cast<std::uint16_t>(s - 1);
  if (s == n_ + 1) {  // crossed the center: literal now excluded
    std::size_t j = pos >> 1;
    ((pos & 1) ? include_negated_ : include_plain_).set(j, false);
    --num_included_;
  }
}

void Clause::type_i_feedback(const BitVector& x, double specificity,
                             Rng& rng) {
  type_i_feedback(x, evaluate(x, EvalMode::Learning), specificity, rng);
}

void Clause::type_i_feedback(const BitVector& x, bool clause_value,
                             double specificity, Rng& rng) {
  check_dims(x);
  if (specificity < 1.0)
    throw std::invalid_argument("specificity must be >= 1");
  const double p_low = 1.0 / specificity;

  if (!clause_value) {
    // Reward deep excludes, penalize includes: state down w.p. 1/s.
    bernoulli_scan(2 * static_cast<std::uint64_t>(k_), p_low, rng,
                   [&](std::uint64_t pos) { bump_down(pos); });
    return;
  }

  // Clause fired: literals valued 1 move up w.p. (s-1)/s (reward for
  // includes, penalty pulling excludes toward inclusion). The 1/s
  // complement is drawn as lazily enumerated skip indices.
  if (p_low < 1.0) {  // s == 1 skips everything
    const double log1mp = std::log1p(-p_low);
    const std::uint64_t none = static_cast<std::uint64_t>(k_);
    auto draw_gap = [&]() -> std::uint64_t {
      double g = std::floor(std::log(rng.uniform_pos()) / log1mp);
      return g >= static_cast<double>(k_) ? none
                                          : static_cast<std::uint64_t>(g);
    };
    std::uint64_t skip = draw_gap();
    for (std::uint32_t j = 0; j < k_; ++j) {
      if (skip == j) {
        std::uint64_t gap = draw_gap();
        skip = gap >= none ? none : skip + 1 + gap;
        continue;
      }
      bump_up(2 * static_cast<std::size_t>(j) + (x.get(j) ? 0 : 1));
    }
  }

  // Literals valued 0 (all excluded when the clause fired) move down
  // w.p. 1/s.
  bernoulli_scan(k_, p_low, rng, [&](std::uint64_t j) {
    std::size_t pos = 2 * static_cast<std::size_t>(j) + (x.get(j) ? 1 : 0);
    assert(states_[pos] <= n_ &&
           "included literal valued 0 contradicts clause value 1");
    bump_down(pos);
  });
}

void Clause::type_ii_feedback(const BitVector& x) {
  type_ii_feedback(x, evaluate(x, EvalMode::Learning));
}

void Clause::type_ii_feedback(const BitVector& x, bool clause_value) {
  check_dims(x);
  if (!clause_value) return;  // every cell is Inaction
  for (std::uint32_t j = 0; j < k_; ++j) {
    std::size_t pos = 2 * static_cast<std::size_t>(j) + (x.get(j) ? 1 : 0);
    if (states_[pos] <= n_) bump_up(pos);
  }
}

void Clause::set_states(const std::vector<std::uint16_t>& states) {
  if (states.size() != states_.size())
    throw std::invalid_argument("state array size mismatch");
  include_plain_ = BitVector(k_);
  include_negated_ = BitVector(k_);
  num_included_ = 0;
  for (std::size_t pos = 0; pos < states.size(); ++pos) {
    std::uint16_t s = states[pos];
    if (s < 1 || s > 2 * n_)
      throw std::invalid_argument("automaton state out of [1, 2N]");
    states_[pos] = s;
    if (s > n_) {
      std::size_t j = pos >> 1;
      ((pos & 1) ? include_negated_ : include_plain_).set(j);
      ++num_included_;
    }
  }
}

}  // namespace tsetlin
