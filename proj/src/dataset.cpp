#include "tsetlin/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tsetlin/rng.hpp"

namespace fs = std::filesystem;

namespace tsetlin {

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("unreadable file: " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> sorted_regular_files(const fs::path& dir) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("missing directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

void append_dir(RawCorpus& corpus, const fs::path& dir, int label) {
  for (const auto& p : sorted_regular_files(dir)) {
    corpus.texts.push_back(read_file(p));
    corpus.labels.push_back(label);
    corpus.provenance.push_back(p.generic_string());
  }
}

}  // namespace

std::map<std::string, std::string> default_newsgroup_grouping() {
  std::map<std::string, std::string> g;
  for (const char* name :
       {"comp.graphics", "comp.os.ms-windows.misc", "comp.sys.ibm.pc.hardware",
        "comp.sys.mac.hardware", "comp.windows.x"})
    g[name] = "computers";
  for (const char* name : {"rec.autos", "rec.motorcycles", "rec.sport.baseball",
                           "rec.sport.hockey"})
    g[name] = "recreation";
  for (const char* name :
       {"sci.crypt", "sci.electronics", "sci.med", "sci.space"})
    g[name] = "science";
  for (const char* name : {"talk.politics.guns", "talk.politics.mideast",
                           "talk.politics.misc"})
    g[name] = "politics";
  return g;
}

ImdbCorpora load_imdb(const fs::path& root) {
  ImdbCorpora out;
  // Label ordinals: neg=0, pos=1 (sorted label names).
  for (RawCorpus* c : {&out.train, &out.test})
    c->class_labels = {"neg", "pos"};
  append_dir(out.train, root / "train" / "neg", 0);
  append_dir(out.train, root / "train" / "pos", 1);
  append_dir(out.test, root / "test" / "neg", 0);
  append_dir(out.test, root / "test" / "pos", 1);
  return out;
}

NewsgroupsResult load_20newsgroups(
    const fs::path& root, const std::map<std::string, std::string>& grouping) {
  if (!fs::is_directory(root))
    throw std::runtime_error("missing directory: " + root.string());
  if (grouping.empty()) throw std::runtime_error("empty newsgroup grouping");

  std::vector<std::string> categories;
  for (const auto& [ng, cat] : grouping)
    if (std::find(categories.begin(), categories.end(), cat) == categories.end())
      categories.push_back(cat);
  std::sort(categories.begin(), categories.end());

  std::vector<fs::path> group_dirs;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory()) group_dirs.push_back(e.path());
  std::sort(group_dirs.begin(), group_dirs.end());

  for (const auto& [ng, cat] : grouping)
    if (!fs::is_directory(root / ng))
      throw std::runtime_error("grouping references absent newsgroup: " + ng);

  NewsgroupsResult result;
  result.corpus.class_labels = categories;
  for (const auto& dir : group_dirs) {
    auto it = grouping.find(dir.filename().string());
    if (it == grouping.end()) {
      result.skipped += sorted_regular_files(dir).size();
      continue;
    }
    int label = static_cast<int>(
        std::find(categories.begin(), categories.end(), it->second) -
        categories.begin());
    append_dir(result.corpus, dir, label);
  }
  if (result.corpus.texts.empty())
    throw std::runtime_error("no documents loaded from " + root.string());
  return result;
}

RawCorpus load_labeled_dirs(const fs::path& root) {
  if (!fs::is_directory(root))
    throw std::runtime_error("missing directory: " + root.string());
  std::vector<fs::path> label_dirs;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory()) label_dirs.push_back(e.path());
  std::sort(label_dirs.begin(), label_dirs.end());
  if (label_dirs.empty())
    throw std::runtime_error("no class directories under " + root.string());

  RawCorpus corpus;
  for (const auto& d : label_dirs)
    corpus.class_labels.push_back(d.filename().string());
  for (std::size_t c = 0; c < label_dirs.size(); ++c)
    append_dir(corpus, label_dirs[c], static_cast<int>(c));
  if (corpus.texts.empty())
    throw std::runtime_error("no documents loaded from " + root.string());
  return corpus;
}

std::vector<SplitIndices> make_splits(const std::vector<int>& labels,
                                      std::size_t num_classes,
                                      const SplitPlan& plan) {
  std::vector<std::vector<std::size_t>> by_class(num_classes);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= num_classes)
      throw std::invalid_argument("label ordinal out of range");
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);
  }

  Rng master(plan.seed);

  if (plan.kind == SplitPlan::Kind::HoldOut) {
    if (plan.train_fraction <= 0.0 || plan.train_fraction >= 1.0)
      throw std::invalid_argument("train_fraction must be in (0, 1)");
    SplitIndices split;
    Rng rng = master.split(0);
    for (auto cls : by_class) {
      rng.shuffle(cls.data(), cls.size());
      auto n_train = static_cast<std::size_t>(
          plan.train_fraction * static_cast<double>(cls.size()) + 0.5);
      n_train = std::min(n_train, cls.size());
      split.train.insert(split.train.end(), cls.begin(), cls.begin() + n_train);
      split.test.insert(split.test.end(), cls.begin() + n_train, cls.end());
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return {std::move(split)};
  }

  if (plan.folds < 2) throw std::invalid_argument("folds must be >= 2");
  for (std::size_t c = 0; c < num_classes; ++c)
    if (by_class[c].size() < plan.folds)
      throw std::invalid_argument("class " + std::to_string(c) +
                                  " has fewer examples than folds");

  std::vector<SplitIndices> splits;
  for (std::uint32_t rep = 0; rep < plan.repeats; ++rep) {
    Rng rng = master.split(rep);
    // Deal each class round-robin into folds after a per-repeat shuffle.
    std::vector<std::vector<std::size_t>> folds(plan.folds);
    for (auto cls : by_class) {
      rng.shuffle(cls.data(), cls.size());
      for (std::size_t i = 0; i < cls.size(); ++i)
        folds[i % plan.folds].push_back(cls[i]);
    }
    for (std::uint32_t f = 0; f < plan.folds; ++f) {
      SplitIndices split;
      split.test = folds[f];
      for (std::uint32_t g = 0; g < plan.folds; ++g)
        if (g != f)
          split.train.insert(split.train.end(), folds[g].begin(),
                             folds[g].end());
      std::sort(split.train.begin(), split.train.end());
      std::sort(split.test.begin(), split.test.end());
      splits.push_back(std::move(split));
    }
  }
  return splits;
}

RawCorpus subset(const RawCorpus& corpus, const std::vector<std::size_t>& idx) {
  RawCorpus out;
  out.class_labels = corpus.class_labels;
  out.texts.reserve(idx.size());
  out.labels.reserve(idx.size());
  for (std::size_t i : idx) {
    out.texts.push_back(corpus.texts[i]);
    out.labels.push_back(corpus.labels[i]);
    if (i < corpus.provenance.size())
      out.provenance.push_back(corpus.provenance[i]);
  }
  return out;
}

}  // namespace tsetlin
