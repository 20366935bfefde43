#pragma once

#include <string>
#include <vector>

#include "tsetlin/bitvector.hpp"

namespace tsetlin {

// Binarized, labeled document collection.
struct Corpus {
  std::vector<BitDocument> documents;
  std::vector<std::string> class_labels;
  std::vector<std::string> provenance;  // source id per document, may be empty

  std::size_t size() const { return documents.size(); }
  std::size_t num_classes() const { return class_labels.size(); }
};

// Labeled raw texts, before tokenization/binarization.
struct RawCorpus {
  std::vector<std::string> texts;
  std::vector<int> labels;  // ordinal into class_labels
  std::vector<std::string> class_labels;
  std::vector<std::string> provenance;

  std::size_t size() const { return texts.size(); }
};

}  // namespace tsetlin
