#include "tsetlin/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace tsetlin {

void TokenizerConfig::validate() const {
  if (ngram_sizes.empty())
    throw std::invalid_argument("ngram_sizes must be non-empty");
  if (ngram_sizes.count(0))
    throw std::invalid_argument("ngram sizes must be >= 1");
  if (min_document_frequency == 0)
    throw std::invalid_argument("min_document_frequency must be >= 1");
}

Vocabulary::Vocabulary(std::vector<std::string> terms)
    : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], i).second)
      throw std::invalid_argument("duplicate term in vocabulary: " + terms_[i]);
  }
}

std::int64_t Vocabulary::index_of(const std::string& term) const {
  auto it = index_.find(term);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::string> tokenize(const std::string& text,
                                  const TokenizerConfig& cfg) {
  cfg.validate();
  std::string cleaned;
  cleaned.reserve(text.size());
  for (unsigned char ch : text) {
    if (cfg.strip_punctuation && std::ispunct(ch)) {
      cleaned.push_back(' ');
    } else if (cfg.lowercase) {
      cleaned.push_back(static_cast<char>(std::tolower(ch)));
    } else {
      cleaned.push_back(static_cast<char>(ch));
    }
  }

  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[i])))
      ++i;
    std::size_t start = i;
    while (i < cleaned.size() && !std::isspace(static_cast<unsigned char>(cleaned[i])))
      ++i;
    if (i > start) words.push_back(cleaned.substr(start, i - start));
  }

  std::vector<std::string> terms;
  for (std::uint32_t n : cfg.ngram_sizes) {
    if (words.size() < n) continue;
    for (std::size_t j = 0; j + n <= words.size(); ++j) {
      std::string gram = words[j];
      for (std::uint32_t g = 1; g < n; ++g) {
        gram.push_back('_');
        gram += words[j + g];
      }
      terms.push_back(std::move(gram));
    }
  }
  return terms;
}

namespace {

// Per-term document frequency over the corpus.
std::map<std::string, std::size_t> document_frequencies(
    const RawCorpus& corpus, const TokenizerConfig& cfg) {
  std::map<std::string, std::size_t> df;
  for (const auto& text : corpus.texts) {
    std::unordered_set<std::string> seen;
    for (auto& t : tokenize(text, cfg)) seen.insert(std::move(t));
    for (const auto& t : seen) ++df[t];
  }
  return df;
}

}  // namespace

Vocabulary build_vocabulary(const RawCorpus& corpus,
                            const TokenizerConfig& cfg) {
  cfg.validate();
  if (corpus.texts.empty()) throw std::invalid_argument("empty corpus");

  auto df = document_frequencies(corpus, cfg);
  std::vector<std::pair<std::string, std::size_t>> kept;
  kept.reserve(df.size());
  for (auto& [term, count] : df)
    if (count >= cfg.min_document_frequency) kept.emplace_back(term, count);

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::vector<std::string> terms;
  terms.reserve(kept.size());
  for (auto& [term, count] : kept) terms.push_back(std::move(term));
  return Vocabulary(std::move(terms));
}

BitDocument binarize(const std::string& text, const Vocabulary& vocab,
                     const TokenizerConfig& cfg) {
  BitDocument doc;
  doc.bits = BitVector(vocab.size());
  for (const auto& term : tokenize(text, cfg)) {
    std::int64_t idx = vocab.index_of(term);
    if (idx >= 0) doc.bits.set(static_cast<std::size_t>(idx));
  }
  return doc;
}

Corpus binarize_corpus(const RawCorpus& corpus, const Vocabulary& vocab,
                       const TokenizerConfig& cfg) {
  Corpus out;
  out.class_labels = corpus.class_labels;
  out.provenance = corpus.provenance;
  out.documents.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    BitDocument doc = binarize(corpus.texts[i], vocab, cfg);
    doc.label = corpus.labels[i];
    out.documents.push_back(std::move(doc));
  }
  return out;
}

namespace {

double entropy_bits(const std::map<int, std::size_t>& counts,
                    std::size_t total) {
  if (total == 0) return 0.0;
  double h = 0.0;
  for (const auto& [label, n] : counts) {
    if (n == 0) continue;
    double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

// IG from per-class counts of examples where the feature is 1, plus
// overall class counts.
double information_gain_from_counts(const std::map<int, std::size_t>& on,
                                    const std::map<int, std::size_t>& all,
                                    std::size_t n) {
  std::map<int, std::size_t> off;
  std::size_t n_on = 0;
  for (const auto& [label, total] : all) {
    std::size_t o = 0;
    if (auto it = on.find(label); it != on.end()) o = it->second;
    off[label] = total - o;
    n_on += o;
  }
  const std::size_t n_off = n - n_on;
  double ig = entropy_bits(all, n) -
              (static_cast<double>(n_on) / n) * entropy_bits(on, n_on) -
              (static_cast<double>(n_off) / n) * entropy_bits(off, n_off);
  return std::max(ig, 0.0);
}

}  // namespace

double information_gain(const std::vector<std::uint8_t>& feature_bits,
                        const std::vector<int>& labels) {
  if (feature_bits.size() != labels.size())
    throw std::invalid_argument("feature/label length mismatch");
  if (labels.empty()) throw std::invalid_argument("empty table");

  std::map<int, std::size_t> all, on;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ++all[labels[i]];
    if (feature_bits[i]) ++on[labels[i]];
  }
  return information_gain_from_counts(on, all, labels.size());
}

FeatureSelection select_features(const RawCorpus& train,
                                 const TokenizerConfig& cfg,
                                 std::size_t top_k) {
  if (top_k == 0) throw std::invalid_argument("top_k must be >= 1");
  Vocabulary full = build_vocabulary(train, cfg);

  if (top_k >= full.size()) {
    const bool truncated = top_k > full.size();
    return {std::move(full), truncated};
  }

  // Per-term, per-class presence counts over the training split only
  // (a full term x document matrix would not fit at benchmark scale).
  const std::size_t n_docs = train.size();
  std::map<int, std::size_t> class_counts;
  for (int label : train.labels) ++class_counts[label];
  std::vector<std::map<int, std::size_t>> on_counts(full.size());
  for (std::size_t d = 0; d < n_docs; ++d) {
    std::unordered_set<std::int64_t> seen;
    for (const auto& term : tokenize(train.texts[d], cfg)) {
      std::int64_t idx = full.index_of(term);
      if (idx >= 0 && seen.insert(idx).second)
        ++on_counts[static_cast<std::size_t>(idx)][train.labels[d]];
    }
  }

  std::vector<std::pair<double, std::size_t>> scored(full.size());
  for (std::size_t t = 0; t < full.size(); ++t)
    scored[t] = {information_gain_from_counts(on_counts[t], class_counts, n_docs),
                 t};

  // Descending score; ties keep the vocabulary's deterministic order.
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<std::string> terms;
  terms.reserve(top_k);
  for (std::size_t i = 0; i < top_k; ++i)
    terms.push_back(full.term(scored[i].second));
  return {Vocabulary(std::move(terms)), false};
}

}  // namespace tsetlin
