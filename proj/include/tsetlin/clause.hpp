#pragma once

#include <cstdint>
#include <vector>

#include "tsetlin/automaton.hpp"
#include "tsetlin/bitvector.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

enum class EvalMode { Learning, Inference };

// A propositional variable (term presence) or its negation.
struct Literal {
  std::uint32_t feature_index;
  bool negated;

  bool operator==(const Literal&) const = default;
};

// A conjunctive clause over k features: 2k automata (position 2j
// controls literal x_j, position 2j+1 controls ~x_j) plus a vote
// polarity. Include masks are kept in lockstep with the automaton
// states so evaluation is word-wise AND/compare.
class Clause {
 public:
  // Automaton states are initialized uniformly over {N, N+1}, drawn
  // from `rng` in position order.
  Clause(std::uint32_t num_features, int polarity,
         std::uint32_t n_states_per_action, Rng& rng);

  std::uint32_t num_features() const { return k_; }
  std::uint32_t n_states_per_action() const { return n_; }
  int polarity() const { return polarity_; }

  // 1 iff every included plain literal's bit is 1 and every included
  // negated literal's bit is 0. An empty clause is 1 while learning
  // and 0 at inference.
  bool evaluate(const BitVector& x, EvalMode mode) const;

  // Included literals in ascending feature order, plain before negated
  // at equal index.
  std::vector<Literal> included_literals() const;
  std::size_t num_included() const { return num_included_; }
  bool empty() const { return num_included_ == 0; }

  // Type I feedback (combats false negatives): clause value 0 nudges
  // every automaton down with probability 1/s; clause value 1 deepens
  // one-valued literals with probability (s-1)/s and nudges zero-valued
  // (necessarily excluded) literals down with probability 1/s.
  void type_i_feedback(const BitVector& x, double specificity, Rng& rng);
  void type_i_feedback(const BitVector& x, bool clause_value,
                       double specificity, Rng& rng);

  // Type II feedback (combats false positives): when the clause fires,
  // every excluded zero-valued literal is penalized toward inclusion,
  // pushing in a literal that falsifies the clause on this document.
  void type_ii_feedback(const BitVector& x);
  void type_ii_feedback(const BitVector& x, bool clause_value);

  std::uint32_t automaton_state(std::size_t position) const {
    return states_[position];
  }
  TsetlinAutomaton automaton(std::size_t position) const {
    return TsetlinAutomaton::from_state(states_[position], n_);
  }
  const std::vector<std::uint16_t>& states() const { return states_; }

  // Replaces all 2k automaton states (used by model deserialization).
  void set_states(const std::vector<std::uint16_t>& states);

 private:
  void check_dims(const BitVector& x) const;
  void bump_up(std::size_t pos);
  void bump_down(std::size_t pos);

  std::uint32_t k_;
  std::uint32_t n_;
  int polarity_;
  std::vector<std::uint16_t> states_;  // 2k states in [1, 2N]
  BitVector include_plain_;
  BitVector include_negated_;
  std::size_t num_included_ = 0;
};

}  // namespace tsetlin
