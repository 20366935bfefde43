#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tsetlin/corpus.hpp"

namespace tsetlin {

struct TokenizerConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  std::set<std::uint32_t> ngram_sizes = {1};
  std::uint32_t min_document_frequency = 1;

  void validate() const;
};

// Ordered term -> feature-index map. Order is descending document
// frequency with lexicographic tie-break, so rebuilds are identical.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::string& term(std::size_t i) const { return terms_[i]; }

  // Index of a term, or -1 if out of vocabulary.
  std::int64_t index_of(const std::string& term) const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Lowercases and maps punctuation to spaces per cfg, splits on
// whitespace, then emits contiguous n-grams (underscore-joined) for
// each configured size in ascending order.
std::vector<std::string> tokenize(const std::string& text,
                                  const TokenizerConfig& cfg);

Vocabulary build_vocabulary(const RawCorpus& corpus,
                            const TokenizerConfig& cfg);

BitDocument binarize(const std::string& text, const Vocabulary& vocab,
                     const TokenizerConfig& cfg);

Corpus binarize_corpus(const RawCorpus& corpus, const Vocabulary& vocab,
                       const TokenizerConfig& cfg);

// H(Y) - H(Y|X) in bits for a binary feature against class ordinals.
double information_gain(const std::vector<std::uint8_t>& feature_bits,
                        const std::vector<int>& labels);

struct FeatureSelection {
  Vocabulary vocabulary;
  // Set when top_k exceeded the full vocabulary and selection fell
  // back to returning everything.
  bool truncated = false;
};

// Builds the full vocabulary from the training corpus, scores every
// term by information gain, keeps the top_k (ties by vocabulary
// order), and re-indexes by descending score.
FeatureSelection select_features(const RawCorpus& train,
                                 const TokenizerConfig& cfg,
                                 std::size_t top_k);

}  // namespace tsetlin
