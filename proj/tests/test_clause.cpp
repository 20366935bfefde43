#include <doctest.h>

#include <map>

#include "tsetlin/clause.hpp"
#include "tsetlin/rng.hpp"

using namespace tsetlin;

namespace {

BitVector bits_of(std::initializer_list<int> vals) {
  BitVector v(vals.size());
  std::size_t i = 0;
  for (int b : vals) v.set(i++, b != 0);
  return v;
}

// Forces the clause's automata so that exactly the given literals are
// included (deep states on both sides).
void force_literals(Clause& c, const std::vector<Literal>& literals) {
  std::uint32_t n = c.n_states_per_action();
  std::vector<std::uint16_t> states(2 * c.num_features(),
                                    static_cast<std::uint16_t>(1));
  for (const Literal& lit : literals)
    states[2 * lit.feature_index + (lit.negated ? 1 : 0)] =
        static_cast<std::uint16_t>(2 * n);
  c.set_states(states);
}

Clause make_clause(std::uint32_t k, const std::vector<Literal>& literals,
                   int polarity = 1, std::uint32_t n = 100,
                   std::uint64_t seed = 1) {
  Rng rng(seed);
  Clause c(k, polarity, n, rng);
  force_literals(c, literals);
  return c;
}

// Scalar oracle: materialize included literals and check each bit.
bool oracle_evaluate(const Clause& c, const BitVector& x, EvalMode mode) {
  auto lits = c.included_literals();
  if (lits.empty()) return mode == EvalMode::Learning;
  for (const Literal& lit : lits) {
    bool bit = x.get(lit.feature_index);
    if (lit.negated ? bit : !bit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("included_literals reflects automata actions in order") {
  Rng rng(3);
  Clause c(4, 1, 100, rng);

  force_literals(c, {});
  CHECK(c.included_literals().empty());

  force_literals(c, {{3, false}});
  CHECK(c.included_literals() == std::vector<Literal>{{3, false}});

  force_literals(c, {{1, false}, {2, true}});
  CHECK(c.included_literals() == std::vector<Literal>{{1, false}, {2, true}});

  // plain before negated at equal index
  force_literals(c, {{2, true}, {2, false}});
  CHECK(c.included_literals() == std::vector<Literal>{{2, false}, {2, true}});
}

TEST_CASE("clause evaluation on term presence") {
  // features: 0=rash 1=reaction 2=penicillin
  Clause c = make_clause(3, {{0, false}, {1, false}, {2, false}});
  CHECK(c.evaluate(bits_of({1, 1, 1}), EvalMode::Inference));
  CHECK(c.evaluate(bits_of({1, 1, 1}), EvalMode::Learning));

  // features: 0=reacts 1=voltaren; document lacks voltaren
  Clause c2 = make_clause(2, {{0, false}, {1, false}});
  CHECK_FALSE(c2.evaluate(bits_of({1, 0}), EvalMode::Inference));
}

TEST_CASE("empty clause convention") {
  Clause c = make_clause(4, {});
  CHECK(c.evaluate(bits_of({0, 1, 0, 1}), EvalMode::Learning));
  CHECK_FALSE(c.evaluate(bits_of({0, 1, 0, 1}), EvalMode::Inference));
}

TEST_CASE("negated literal conjunction") {
  Clause c = make_clause(3, {{0, false}, {1, true}});
  CHECK(c.evaluate(bits_of({1, 0, 1}), EvalMode::Inference));
  CHECK_FALSE(c.evaluate(bits_of({1, 1, 1}), EvalMode::Inference));
  CHECK_FALSE(c.evaluate(bits_of({0, 0, 1}), EvalMode::Inference));
}

TEST_CASE("dimension mismatch is an error") {
  Clause c = make_clause(3, {{0, false}});
  CHECK_THROWS_AS(c.evaluate(bits_of({1, 1}), EvalMode::Inference),
                  std::invalid_argument);
}

TEST_CASE("bit-packed evaluation matches the scalar oracle") {
  Rng rng(99);
  for (std::uint32_t k : {5u, 17u, 64u}) {
    for (int trial = 0; trial < 3000; ++trial) {
      Clause c(k, trial % 2 ? 1 : -1, 10, rng);
      // random include pattern via random states
      std::vector<std::uint16_t> states(2 * k);
      for (auto& s : states)
        s = static_cast<std::uint16_t>(1 + rng.below(20));
      c.set_states(states);
      BitVector x(k);
      for (std::uint32_t j = 0; j < k; ++j) x.set(j, rng.bernoulli(0.5));
      for (EvalMode mode : {EvalMode::Learning, EvalMode::Inference})
        REQUIRE(c.evaluate(x, mode) == oracle_evaluate(c, x, mode));
    }
  }
}

TEST_CASE("adding a literal can only turn outputs 1 -> 0") {
  Rng rng(7);
  const std::uint32_t k = 16;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Literal> lits;
    for (std::uint32_t j = 0; j < k; ++j) {
      if (rng.bernoulli(0.15)) lits.push_back({j, false});
      if (rng.bernoulli(0.15)) lits.push_back({j, true});
    }
    Clause before = make_clause(k, lits);
    Literal extra{static_cast<std::uint32_t>(rng.below(k)), rng.bernoulli(0.5)};
    auto grown = lits;
    grown.push_back(extra);
    Clause after = make_clause(k, grown);

    BitVector x(k);
    for (std::uint32_t j = 0; j < k; ++j) x.set(j, rng.bernoulli(0.5));
    // monotone restriction: after can fire only where before fired
    if (after.evaluate(x, EvalMode::Inference))
      CHECK(before.evaluate(x, EvalMode::Learning));
  }
}
