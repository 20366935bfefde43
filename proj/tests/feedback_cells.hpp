#pragma once

// Test-only harness that measures empirical Reward/Inaction/Penalty
// frequencies for single feedback-table cells. A k=2 clause isolates
// the automaton under test at position 0 (plain literal x_0); feature 1
// supplies a falsifying literal when the cell needs clause value 0.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tsetlin/clause.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin::testing {

struct CellSetup {
  Action action;        // action of the automaton under test
  bool clause_value;    // learning-mode clause value
  bool literal_value;   // value of the automaton's literal (x_0)
};

struct CellFrequencies {
  double reward = 0.0;
  double inaction = 0.0;
  double penalty = 0.0;
};

inline constexpr std::uint32_t kCellStates = 50;  // N; probes start mid-side

// Builds states and a document realizing the cell for position 0.
inline void realize_cell(const CellSetup& cell,
                         std::vector<std::uint16_t>& states, BitVector& x) {
  const std::uint16_t deep_exclude = 1;
  const std::uint16_t probe_exclude = kCellStates / 2;              // 25
  const std::uint16_t probe_include = kCellStates + kCellStates / 2;  // 75
  const std::uint16_t deep_include = 2 * kCellStates;

  states.assign(4, deep_exclude);
  x = BitVector(2);

  states[0] = cell.action == Action::Include ? probe_include : probe_exclude;
  x.set(0, cell.literal_value);

  // Make the clause value come out as requested.
  bool position0_included = cell.action == Action::Include;
  bool clause_so_far = !position0_included || cell.literal_value;
  if (cell.clause_value) {
    if (!clause_so_far)
      throw std::logic_error("cell unreachable: included literal valued 0");
    // remaining literals excluded; clause stays 1 (or empty -> 1 learning)
  } else if (clause_so_far) {
    // include plain x_1 with bit 0 to falsify the clause
    states[2] = deep_include;
    x.set(1, false);
  }
}

template <typename ApplyFeedback>
CellFrequencies measure_cell(const CellSetup& cell, std::size_t draws,
                             Rng& rng, ApplyFeedback&& apply) {
  std::vector<std::uint16_t> states;
  BitVector x;
  realize_cell(cell, states, x);

  CellFrequencies freq;
  Clause clause(2, 1, kCellStates, rng);
  for (std::size_t i = 0; i < draws; ++i) {
    clause.set_states(states);
    apply(clause, x, rng);
    int before = states[0];
    int after = static_cast<int>(clause.automaton_state(0));
    // Away from center = reward, toward/across = penalty.
    int away = cell.action == Action::Include ? 1 : -1;
    if (after == before)
      freq.inaction += 1;
    else if (after == before + away)
      freq.reward += 1;
    else if (after == before - away)
      freq.penalty += 1;
    else
      throw std::logic_error("state moved by more than one step");
  }
  freq.reward /= static_cast<double>(draws);
  freq.inaction /= static_cast<double>(draws);
  freq.penalty /= static_cast<double>(draws);
  return freq;
}

}  // namespace tsetlin::testing
