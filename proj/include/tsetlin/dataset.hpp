#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tsetlin/corpus.hpp"

namespace tsetlin {

// Maps newsgroup directory names to the four super-categories used by
// the 4-class benchmark (comp.* -> computers, rec.* -> recreation,
// sci.* -> science, talk.politics.* -> politics).
std::map<std::string, std::string> default_newsgroup_grouping();

struct ImdbCorpora {
  RawCorpus train;
  RawCorpus test;
};

// Loads the aclImdb directory layout (train/{pos,neg}, test/{pos,neg},
// one UTF-8 review per file). Files are read in sorted-path order;
// class labels are ["neg", "pos"].
ImdbCorpora load_imdb(const std::filesystem::path& root);

struct NewsgroupsResult {
  RawCorpus corpus;
  std::size_t skipped = 0;  // documents outside the grouping
};

// Loads a 20 Newsgroups tree (one directory per newsgroup, one file
// per message). Newsgroups absent from the grouping are skipped and
// counted; class labels are the sorted distinct category names.
NewsgroupsResult load_20newsgroups(
    const std::filesystem::path& root,
    const std::map<std::string, std::string>& grouping =
        default_newsgroup_grouping());

// Loads root/<label>/<file> trees: one subdirectory per class.
RawCorpus load_labeled_dirs(const std::filesystem::path& root);

struct SplitPlan {
  enum class Kind { HoldOut, CrossValidation };
  Kind kind = Kind::HoldOut;
  double train_fraction = 0.8;   // HoldOut
  std::uint32_t folds = 10;      // CrossValidation
  std::uint32_t repeats = 1;     // CrossValidation
  std::uint64_t seed = 42;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Stratified, seeded splits over label ordinals. HoldOut yields one
// pair; CV(folds, repeats) yields folds*repeats pairs whose test sets
// partition the index set within each repeat.
std::vector<SplitIndices> make_splits(const std::vector<int>& labels,
                                      std::size_t num_classes,
                                      const SplitPlan& plan);

RawCorpus subset(const RawCorpus& corpus, const std::vector<std::size_t>& idx);

}  // namespace tsetlin
