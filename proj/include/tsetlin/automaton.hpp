#pragma once

#include <cstdint>
#include <stdexcept>

#include "tsetlin/rng.hpp"

namespace tsetlin {

enum class Action { Exclude, Include };

namespace ta {

// State transitions shared by the standalone automaton and the packed
// clause storage. States live in [1, 2N]; 1..N select Exclude,
// N+1..2N select Include. Rewards move away from the center and
// saturate at the ends; penalties move toward (and across) the center.

inline Action action_of(std::uint32_t state, std::uint32_t n) {
  return state <= n ? Action::Exclude : Action::Include;
}

inline std::uint32_t rewarded(std::uint32_t state, std::uint32_t n) {
  if (state <= n) return state > 1 ? state - 1 : state;
  return state < 2 * n ? state + 1 : state;
}

inline std::uint32_t penalized(std::uint32_t state, std::uint32_t n) {
  return state <= n ? state + 1 : state - 1;
}

}  // namespace ta

// Two-action Tsetlin Automaton: a bounded integer state encoding an
// Exclude/Include decision plus confidence (distance from the center).
class TsetlinAutomaton {
 public:
  // Initial state is drawn uniformly from {N, N+1}, the two
  // maximal-uncertainty center states.
  TsetlinAutomaton(std::uint32_t n_states_per_action, Rng& rng)
      : n_(check_n(n_states_per_action)),
        state_(n_ + static_cast<std::uint32_t>(rng.below(2))) {}

  static TsetlinAutomaton from_state(std::uint32_t state,
                                     std::uint32_t n_states_per_action) {
    TsetlinAutomaton a(check_n(n_states_per_action), state);
    if (state < 1 || state > 2 * n_states_per_action)
      throw std::invalid_argument("automaton state out of [1, 2N]");
    return a;
  }

  std::uint32_t state() const { return state_; }
  std::uint32_t states_per_action() const { return n_; }

  Action action() const { return ta::action_of(state_, n_); }

  void reward() { state_ = ta::rewarded(state_, n_); }
  void penalize() { state_ = ta::penalized(state_, n_); }

 private:
  TsetlinAutomaton(std::uint32_t n, std::uint32_t state)
      : n_(n), state_(state) {}

  static std::uint32_t check_n(std::uint32_t n) {
    if (n == 0)
      throw std::invalid_argument("n_states_per_action must be >= 1");
    return n;
  }

  std::uint32_t n_;
  std::uint32_t state_;
};

}  // namespace tsetlin
