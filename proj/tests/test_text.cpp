#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "tsetlin/rng.hpp"
#include "tsetlin/text.hpp"

using namespace tsetlin;

namespace {

// Independent entropy oracle for information gain.
double oracle_ig(const std::vector<std::uint8_t>& bits,
                 const std::vector<int>& labels) {
  auto entropy = [](const std::vector<int>& ys) {
    if (ys.empty()) return 0.0;
    std::map<int, int> counts;
    for (int y : ys) ++counts[y];
    double h = 0.0;
    for (auto& [y, c] : counts) {
      double p = static_cast<double>(c) / ys.size();
      h -= p * std::log2(p);
    }
    return h;
  };
  std::vector<int> on, off;
  for (std::size_t i = 0; i < labels.size(); ++i)
    (bits[i] ? on : off).push_back(labels[i]);
  double n = static_cast<double>(labels.size());
  return entropy(labels) - (on.size() / n) * entropy(on) -
         (off.size() / n) * entropy(off);
}

RawCorpus corpus_of(std::vector<std::pair<std::string, int>> docs,
                    std::vector<std::string> labels) {
  RawCorpus c;
  c.class_labels = std::move(labels);
  for (auto& [text, label] : docs) {
    c.texts.push_back(std::move(text));
    c.labels.push_back(label);
  }
  return c;
}

}  // namespace

TEST_CASE("tokenize lowercases, strips punctuation, and emits n-grams") {
  TokenizerConfig cfg;
  CHECK(tokenize("Reacts to Voltaren.", cfg) ==
        std::vector<std::string>{"reacts", "to", "voltaren"});

  cfg.ngram_sizes = {1, 2};
  CHECK(tokenize("Reacts to Voltaren.", cfg) ==
        std::vector<std::string>{"reacts", "to", "voltaren", "reacts_to",
                                 "to_voltaren"});

  CHECK(tokenize("", cfg).empty());

  SUBCASE("punctuation and case can be preserved") {
    TokenizerConfig raw;
    raw.lowercase = false;
    raw.strip_punctuation = false;
    CHECK(tokenize("Reacts to Voltaren.", raw) ==
          std::vector<std::string>{"Reacts", "to", "Voltaren."});
  }

  SUBCASE("n-gram larger than the token count emits nothing for that size") {
    TokenizerConfig quad;
    quad.ngram_sizes = {4};
    CHECK(tokenize("only three words", quad).empty());
  }
}

TEST_CASE("vocabulary construction") {
  TokenizerConfig cfg;

  SUBCASE("min_df keeps only shared terms") {
    cfg.min_document_frequency = 2;
    auto corpus = corpus_of({{"apple banana", 0}, {"apple cherry", 1}},
                            {"a", "b"});
    Vocabulary v = build_vocabulary(corpus, cfg);
    CHECK(v.terms() == std::vector<std::string>{"apple"});
  }

  SUBCASE("min_df 1 keeps every distinct term, df-desc then lexicographic") {
    auto corpus = corpus_of({{"b a", 0}, {"b c", 1}}, {"a", "b"});
    Vocabulary v = build_vocabulary(corpus, TokenizerConfig{});
    CHECK(v.terms() == std::vector<std::string>{"b", "a", "c"});
  }

  SUBCASE("rebuild is deterministic") {
    auto corpus = corpus_of(
        {{"the quick brown fox", 0}, {"the lazy dog", 1}, {"quick dog", 0}},
        {"a", "b"});
    Vocabulary v1 = build_vocabulary(corpus, cfg);
    Vocabulary v2 = build_vocabulary(corpus, cfg);
    CHECK(v1.terms() == v2.terms());
  }

  SUBCASE("empty corpus is rejected") {
    RawCorpus empty;
    CHECK_THROWS_AS(build_vocabulary(empty, cfg), std::invalid_argument);
  }
}

TEST_CASE("binarize sets presence bits") {
  TokenizerConfig cfg;
  Vocabulary vocab({"reacts", "to", "voltaren", "penicillin"});

  BitDocument doc = binarize("reacts to Voltaren", vocab, cfg);
  CHECK(doc.bits.get(0));
  CHECK(doc.bits.get(1));
  CHECK(doc.bits.get(2));
  CHECK_FALSE(doc.bits.get(3));

  SUBCASE("multiplicity does not change bits") {
    BitDocument rep = binarize("voltaren voltaren voltaren", vocab, cfg);
    BitDocument one = binarize("voltaren", vocab, cfg);
    CHECK(rep.bits == one.bits);
  }

  SUBCASE("fully out-of-vocabulary text is all zeros") {
    BitDocument doc2 = binarize("completely unknown words", vocab, cfg);
    CHECK(doc2.bits.count() == 0);
  }
}

TEST_CASE("binarize round-trips training documents against a set oracle") {
  TokenizerConfig cfg;
  cfg.ngram_sizes = {1, 2};
  auto corpus = corpus_of({{"alpha beta gamma", 0},
                           {"beta gamma delta", 1},
                           {"delta alpha", 0}},
                          {"a", "b"});
  Vocabulary vocab = build_vocabulary(corpus, cfg);
  for (const auto& text : corpus.texts) {
    std::set<std::string> terms;
    for (auto& t : tokenize(text, cfg)) terms.insert(t);
    BitDocument doc = binarize(text, vocab, cfg);
    for (std::size_t j = 0; j < vocab.size(); ++j)
      CHECK(doc.bits.get(j) == (terms.count(vocab.term(j)) > 0));
  }
}

TEST_CASE("information gain on hand-computed tables") {
  CHECK(information_gain({1, 1, 0, 0}, {1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(information_gain({1, 0, 1, 0}, {1, 1, 0, 0}) == doctest::Approx(0.0));
  // H(1/2,1/2) - (3/4) H(2/3,1/3)
  double expected = 1.0 - 0.75 * (-(2.0 / 3) * std::log2(2.0 / 3) -
                                  (1.0 / 3) * std::log2(1.0 / 3));
  CHECK(information_gain({1, 1, 1, 0}, {1, 1, 0, 0}) ==
        doctest::Approx(expected));
  CHECK(information_gain({1, 1, 1, 0}, {1, 1, 0, 0}) ==
        doctest::Approx(0.3113).epsilon(1e-3));

  CHECK_THROWS_AS(information_gain({1, 0}, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("information gain matches the oracle and is label-permutation invariant") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng.below(30);
    std::vector<std::uint8_t> bits(n);
    std::vector<int> labels(n), relabeled(n);
    int n_classes = 2 + static_cast<int>(rng.below(3));
    std::vector<int> perm(n_classes);
    for (int c = 0; c < n_classes; ++c) perm[c] = c;
    rng.shuffle(perm.data(), perm.size());
    for (std::size_t i = 0; i < n; ++i) {
      bits[i] = rng.bernoulli(0.5) ? 1 : 0;
      labels[i] = static_cast<int>(rng.below(n_classes));
      relabeled[i] = perm[labels[i]];
    }
    double ig = information_gain(bits, labels);
    CHECK(ig == doctest::Approx(oracle_ig(bits, labels)).epsilon(1e-12));
    CHECK(ig == doctest::Approx(information_gain(bits, relabeled)).epsilon(1e-12));
    CHECK(ig >= 0.0);
  }
}

TEST_CASE("feature selection") {
  TokenizerConfig cfg;

  SUBCASE("a perfectly predictive term ranks first") {
    auto corpus = corpus_of({{"filler signal alpha", 1},
                             {"filler signal beta", 1},
                             {"filler signal gamma", 1},
                             {"filler alpha", 0},
                             {"filler beta", 0},
                             {"filler gamma", 0}},
                            {"no", "yes"});
    auto sel = select_features(corpus, cfg, 1);
    CHECK(sel.vocabulary.terms() == std::vector<std::string>{"signal"});
    CHECK_FALSE(sel.truncated);

    // Brute-force IG over all terms confirms the ranking.
    Vocabulary full = build_vocabulary(corpus, cfg);
    double best = 0.0;
    std::string best_term;
    for (const auto& term : full.terms()) {
      std::vector<std::uint8_t> bits;
      for (const auto& text : corpus.texts) {
        auto toks = tokenize(text, cfg);
        bits.push_back(std::find(toks.begin(), toks.end(), term) != toks.end());
      }
      double ig = oracle_ig(bits, corpus.labels);
      if (ig > best) {
        best = ig;
        best_term = term;
      }
    }
    CHECK(best_term == "signal");
  }

  SUBCASE("top_k equal to vocabulary size is the identity") {
    auto corpus = corpus_of({{"a b c", 0}, {"c d", 1}}, {"x", "y"});
    Vocabulary full = build_vocabulary(corpus, cfg);
    auto sel = select_features(corpus, cfg, full.size());
    CHECK(sel.vocabulary.terms() == full.terms());
    CHECK_FALSE(sel.truncated);
  }

  SUBCASE("top_k beyond vocabulary size returns everything with a warning") {
    auto corpus = corpus_of({{"a b", 0}, {"b c", 1}}, {"x", "y"});
    auto sel = select_features(corpus, cfg, 100);
    CHECK(sel.vocabulary.size() == 3);
    CHECK(sel.truncated);
  }

  SUBCASE("label-constant corpus falls back to vocabulary order") {
    auto corpus = corpus_of({{"b b-only", 0}, {"a b", 0}}, {"x"});
    auto sel = select_features(corpus, cfg, 2);
    // all IG zero: df-desc/lex order decides
    CHECK(sel.vocabulary.terms() == std::vector<std::string>{"b", "a"});
  }
}
