// tm — train, evaluate, cross-validate, explain, and benchmark Tsetlin
// Machine text categorizers.
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsetlin/dataset.hpp"
#include "tsetlin/explain.hpp"
#include "tsetlin/machine.hpp"
#include "tsetlin/metrics.hpp"
#include "tsetlin/model_io.hpp"
#include "tsetlin/text.hpp"

using namespace tsetlin;
namespace fs = std::filesystem;

namespace {

struct DataOptions {
  std::string dataset;  // imdb | 20ng | dirs
  std::string data_dir;
  double train_fraction = 0.8;
  std::uint64_t split_seed = 42;
};

struct PipelineOptions {
  std::size_t features = 5000;
  std::vector<std::uint32_t> ngrams = {1};
  std::uint32_t min_df = 1;
};

void add_data_options(CLI::App* cmd, DataOptions& d, bool needs_split) {
  cmd->add_option("--dataset", d.dataset, "Dataset layout: imdb, 20ng, dirs")
      ->required()
      ->check(CLI::IsMember({"imdb", "20ng", "dirs"}));
  auto* dir = cmd->add_option("--data-dir", d.data_dir,
                              "Dataset root (default: $TM_DATA_DIR)");
  if (const char* env = std::getenv("TM_DATA_DIR"); env && *env)
    dir->default_val(std::string(env));
  if (needs_split) {
    cmd->add_option("--train-fraction", d.train_fraction,
                    "Train share for datasets without a built-in split")
        ->check(CLI::Range(0.01, 0.99));
    cmd->add_option("--split-seed", d.split_seed,
                    "Seed for the train/test split");
  }
}

void add_pipeline_options(CLI::App* cmd, PipelineOptions& p) {
  cmd->add_option("--features", p.features,
                  "Vocabulary size kept by information-gain selection");
  cmd->add_option("--ngrams", p.ngrams, "Word n-gram sizes (e.g. 1 2)");
  cmd->add_option("--min-df", p.min_df, "Minimum document frequency");
}

void add_hyper_options(CLI::App* cmd, HyperParams& hp) {
  cmd->add_option("--clauses", hp.clauses_per_class, "Clauses per class");
  cmd->add_option("--states", hp.states_per_action,
                  "Automaton states per action (N)");
  cmd->add_option("--s", hp.specificity, "Specificity s");
  cmd->add_option("--threshold", hp.threshold, "Feedback threshold T");
  cmd->add_option("--epochs", hp.epochs, "Training epochs");
  cmd->add_option("--seed", hp.seed, "Training seed");
}

TokenizerConfig tokenizer_of(const PipelineOptions& p) {
  TokenizerConfig cfg;
  cfg.ngram_sizes = std::set<std::uint32_t>(p.ngrams.begin(), p.ngrams.end());
  cfg.min_document_frequency = p.min_df;
  cfg.validate();
  return cfg;
}

fs::path resolve_root(const DataOptions& d) {
  if (d.data_dir.empty())
    throw std::runtime_error(
        "no data directory: pass --data-dir or set TM_DATA_DIR");
  fs::path root(d.data_dir);
  if (!fs::exists(root))
    throw std::runtime_error("data directory not found: " + root.string());
  return root;
}

// Loads the dataset as a (train, test) pair, splitting when the layout
// has no built-in split.
std::pair<RawCorpus, RawCorpus> load_split(const DataOptions& d) {
  fs::path root = resolve_root(d);
  if (d.dataset == "imdb") {
    ImdbCorpora c = load_imdb(root);
    return {std::move(c.train), std::move(c.test)};
  }
  RawCorpus all = d.dataset == "20ng" ? load_20newsgroups(root).corpus
                                      : load_labeled_dirs(root);
  SplitPlan plan;
  plan.kind = SplitPlan::Kind::HoldOut;
  plan.train_fraction = d.train_fraction;
  plan.seed = d.split_seed;
  auto splits = make_splits(all.labels, all.class_labels.size(), plan);
  return {subset(all, splits[0].train), subset(all, splits[0].test)};
}

RawCorpus load_whole(const DataOptions& d) {
  fs::path root = resolve_root(d);
  if (d.dataset == "imdb") {
    ImdbCorpora c = load_imdb(root);
    RawCorpus all = std::move(c.train);
    for (std::size_t i = 0; i < c.test.size(); ++i) {
      all.texts.push_back(std::move(c.test.texts[i]));
      all.labels.push_back(c.test.labels[i]);
      all.provenance.push_back(std::move(c.test.provenance[i]));
    }
    return all;
  }
  return d.dataset == "20ng" ? load_20newsgroups(root).corpus
                             : load_labeled_dirs(root);
}

MetricsReport evaluate(const MultiClassTsetlinMachine& mtm,
                       const Corpus& corpus) {
  std::vector<int> preds, labels;
  preds.reserve(corpus.size());
  for (const auto& doc : corpus.documents) {
    preds.push_back(mtm.classify(doc.bits));
    labels.push_back(*doc.label);
  }
  return macro_metrics(preds, labels, corpus.class_labels.size());
}

std::string csv_cell(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed << *v;
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_train(const DataOptions& data, const PipelineOptions& pipe,
              HyperParams hp, const std::string& out,
              const std::string& history_path, bool parallel, bool quiet) {
  hp.validate();
  auto [raw_train, raw_test] = load_split(data);
  TokenizerConfig cfg = tokenizer_of(pipe);

  if (!quiet)
    std::cout << "loaded " << raw_train.size() << " train / "
              << raw_test.size() << " test documents ("
              << raw_train.class_labels.size() << " classes)\n";

  FeatureSelection sel = select_features(raw_train, cfg, pipe.features);
  Corpus train = binarize_corpus(raw_train, sel.vocabulary, cfg);
  Corpus test = binarize_corpus(raw_test, sel.vocabulary, cfg);
  if (!quiet)
    std::cout << "selected " << sel.vocabulary.size() << " features\n";

  MultiClassTsetlinMachine mtm(
      static_cast<std::uint32_t>(sel.vocabulary.size()), train.class_labels,
      hp);

  std::ofstream history;
  if (!history_path.empty()) {
    history.open(history_path);
    if (!history)
      throw std::runtime_error("cannot write history file: " + history_path);
    history << "epoch,train_acc,test_acc,seconds\n";
  }

  FitOptions opts;
  opts.parallel = parallel;
  opts.track_train_accuracy = true;
  opts.eval_each_epoch = &test;
  opts.on_epoch = [&](const EpochRecord& e) {
    if (history)
      history << e.epoch << "," << csv_cell(e.train_accuracy) << ","
              << csv_cell(e.test_accuracy) << "," << std::setprecision(3)
              << std::fixed << e.seconds << "\n";
    if (!quiet)
      std::cout << "epoch " << e.epoch << ": train "
                << csv_cell(e.train_accuracy) << " test "
                << csv_cell(e.test_accuracy) << " (" << std::setprecision(2)
                << std::fixed << e.seconds << "s)\n";
  };
  mtm.fit(train, opts);

  save_model(mtm, sel.vocabulary, cfg, out);
  MetricsReport report = evaluate(mtm, test);
  std::cout << "model written to " << out << "\n";
  std::cout << report.to_string(train.class_labels);
  return 0;
}

int cmd_eval(const std::string& model_path, const DataOptions& data,
             const std::string& split, bool json) {
  LoadedModel model = load_model(model_path);
  auto [raw_train, raw_test] = load_split(data);
  const RawCorpus& raw = split == "train" ? raw_train : raw_test;
  Corpus corpus = binarize_corpus(raw, model.vocabulary, model.tokenizer);
  if (corpus.class_labels != model.machine.class_labels())
    throw std::runtime_error("dataset classes do not match the model's");
  MetricsReport report = evaluate(model.machine, corpus);
  std::cout << (json ? report.to_json(corpus.class_labels)
                     : report.to_string(corpus.class_labels));
  if (json) std::cout << "\n";
  return 0;
}

int cmd_cv(const DataOptions& data, const PipelineOptions& pipe,
           HyperParams hp, std::uint32_t folds, std::uint32_t repeats,
           bool quiet) {
  hp.validate();
  RawCorpus all = load_whole(data);
  TokenizerConfig cfg = tokenizer_of(pipe);

  SplitPlan plan;
  plan.kind = SplitPlan::Kind::CrossValidation;
  plan.folds = folds;
  plan.repeats = repeats;
  plan.seed = data.split_seed;
  auto splits = make_splits(all.labels, all.class_labels.size(), plan);

  RunSummary summary;
  summary.metric_names = {"accuracy", "macro_precision", "macro_recall",
                          "macro_f1"};
  summary.samples.resize(summary.metric_names.size());

  for (std::size_t i = 0; i < splits.size(); ++i) {
    RawCorpus raw_train = subset(all, splits[i].train);
    RawCorpus raw_test = subset(all, splits[i].test);
    FeatureSelection sel = select_features(raw_train, cfg, pipe.features);
    Corpus train = binarize_corpus(raw_train, sel.vocabulary, cfg);
    Corpus test = binarize_corpus(raw_test, sel.vocabulary, cfg);

    HyperParams fold_hp = hp;
    fold_hp.seed = hp.seed + i;  // derived seed per fold
    MultiClassTsetlinMachine mtm(
        static_cast<std::uint32_t>(sel.vocabulary.size()), train.class_labels,
        fold_hp);
    mtm.fit(train);
    MetricsReport r = evaluate(mtm, test);
    summary.samples[0].push_back(r.accuracy);
    summary.samples[1].push_back(r.macro_precision);
    summary.samples[2].push_back(r.macro_recall);
    summary.samples[3].push_back(r.macro_f1);
    if (!quiet)
      std::cout << "fold " << (i + 1) << "/" << splits.size() << ": accuracy "
                << std::setprecision(4) << std::fixed << r.accuracy
                << " macro-F1 " << r.macro_f1 << "\n";
  }

  std::cout << summary.to_string();
  return 0;
}

int cmd_explain(const std::string& model_path, const std::string& text,
                const std::string& file, bool rules, bool json,
                std::optional<std::size_t> top_n, const DataOptions& data) {
  LoadedModel model = load_model(model_path);

  if (rules) {
    std::optional<Corpus> reference;
    if (!data.dataset.empty()) {
      auto [raw_train, raw_test] = load_split(data);
      reference =
          binarize_corpus(raw_train, model.vocabulary, model.tokenizer);
    }
    std::cout << export_rules(model.machine, model.vocabulary,
                              reference ? &*reference : nullptr,
                              json ? RuleFormat::Json : RuleFormat::Text,
                              top_n);
    if (json) std::cout << "\n";
    return 0;
  }

  std::string document = text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read document file: " + file);
    document.assign(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>());
  }
  if (document.empty())
    throw CLI::ValidationError(
        "explain", "pass --text/--file for a prediction, or --rules");

  PredictionExplanation ex = explain_prediction(
      model.machine, model.vocabulary, document, model.tokenizer);
  std::cout << (json ? ex.to_json() : ex.to_string());
  if (json) std::cout << "\n";
  return 0;
}

int cmd_bench(const DataOptions& data, const PipelineOptions& pipe,
              HyperParams hp, bool parallel) {
  hp.validate();
  auto [raw_train, raw_test] = load_split(data);
  TokenizerConfig cfg = tokenizer_of(pipe);
  FeatureSelection sel = select_features(raw_train, cfg, pipe.features);
  Corpus train = binarize_corpus(raw_train, sel.vocabulary, cfg);
  Corpus test = binarize_corpus(raw_test, sel.vocabulary, cfg);

  MultiClassTsetlinMachine mtm(
      static_cast<std::uint32_t>(sel.vocabulary.size()), train.class_labels,
      hp);

  FitOptions opts;
  opts.parallel = parallel;
  auto t0 = std::chrono::steady_clock::now();
  mtm.fit(train, opts);
  double train_s = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

  t0 = std::chrono::steady_clock::now();
  volatile int sink = 0;
  for (const auto& doc : test.documents) sink += mtm.classify(doc.bits);
  double infer_s = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  (void)sink;

  double trained = static_cast<double>(train.size()) * hp.epochs;
  std::cout << std::setprecision(1) << std::fixed;
  std::cout << "training:  " << trained / train_s << " docs/s ("
            << train.size() << " docs x " << hp.epochs << " epochs in "
            << train_s << "s)\n";
  std::cout << "inference: " << static_cast<double>(test.size()) / infer_s
            << " docs/s (" << test.size() << " docs in " << infer_s << "s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsetlin Machine text categorizer"};
  app.require_subcommand(1);

  DataOptions data;
  PipelineOptions pipe;
  HyperParams hp;
  std::string out = "model.tmm";
  std::string history_path;
  std::string model_path;
  std::string split = "test";
  std::string text;
  std::string file;
  bool json = false;
  bool rules = false;
  bool parallel = false;
  bool quiet = false;
  std::uint32_t folds = 10;
  std::uint32_t repeats = 1;
  std::optional<std::size_t> top_n;

  CLI::App* train = app.add_subcommand("train", "Train and save a model");
  add_data_options(train, data, true);
  add_pipeline_options(train, pipe);
  add_hyper_options(train, hp);
  train->add_option("--out", out, "Model output path");
  train->add_option("--history", history_path, "Per-epoch CSV output path");
  train->add_flag("--parallel", parallel, "Parallel clause updates");
  train->add_flag("--quiet", quiet, "Suppress per-epoch progress");

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a saved model");
  eval->add_option("--model", model_path, "Model file")->required();
  add_data_options(eval, data, true);
  eval->add_option("--split", split, "Evaluation split")
      ->check(CLI::IsMember({"train", "test"}));
  eval->add_flag("--json", json, "Machine-readable report");

  CLI::App* cv = app.add_subcommand("cv", "Repeated cross-validation");
  add_data_options(cv, data, false);
  add_pipeline_options(cv, pipe);
  add_hyper_options(cv, hp);
  cv->add_option("--folds", folds, "Folds")->check(CLI::PositiveNumber);
  cv->add_option("--repeats", repeats, "Repeats")->check(CLI::PositiveNumber);
  cv->add_option("--split-seed", data.split_seed, "Seed for fold assignment");
  cv->add_flag("--quiet", quiet, "Suppress per-fold progress");

  CLI::App* explain =
      app.add_subcommand("explain", "Export rules or explain a prediction");
  explain->add_option("--model", model_path, "Model file")->required();
  explain->add_option("--text", text, "Document text to explain");
  explain->add_option("--file", file, "Document file to explain");
  explain->add_flag("--rules", rules, "Export the learned rules");
  explain->add_option("--top", top_n, "Keep only the top-N rules by support");
  explain->add_flag("--json", json, "Machine-readable output");
  explain
      ->add_option("--dataset", data.dataset,
                   "Reference dataset for rule support counts")
      ->check(CLI::IsMember({"imdb", "20ng", "dirs"}));
  explain->add_option("--data-dir", data.data_dir, "Reference dataset root");

  CLI::App* bench =
      app.add_subcommand("bench", "Training/inference throughput");
  add_data_options(bench, data, true);
  add_pipeline_options(bench, pipe);
  add_hyper_options(bench, hp);
  bench->add_flag("--parallel", parallel, "Parallel clause updates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (train->parsed())
      return cmd_train(data, pipe, hp, out, history_path, parallel, quiet);
    if (eval->parsed()) return cmd_eval(model_path, data, split, json);
    if (cv->parsed()) return cmd_cv(data, pipe, hp, folds, repeats, quiet);
    if (explain->parsed())
      return cmd_explain(model_path, text, file, rules, json, top_n, data);
    if (bench->parsed()) return cmd_bench(data, pipe, hp, parallel);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
