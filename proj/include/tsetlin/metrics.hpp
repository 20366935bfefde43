#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsetlin {

struct ClassMetrics {
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  std::uint64_t support = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_undefined = false;  // no predictions for this class
};

struct MetricsReport {
  std::vector<ClassMetrics> per_class;
  std::vector<std::vector<std::uint64_t>> confusion;  // [actual][predicted]
  std::uint64_t total = 0;
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;  // mean of per-class F1

  std::string to_string(const std::vector<std::string>& labels = {}) const;
  std::string to_json(const std::vector<std::string>& labels = {}) const;
};

MetricsReport macro_metrics(const std::vector<int>& predictions,
                            const std::vector<int>& labels,
                            std::size_t num_classes);

struct ConfidenceInterval {
  double mean = 0.0;
  double half_width = 0.0;
};

// Student's t interval over run-level samples. Requires >= 2 samples.
ConfidenceInterval confidence_interval(const std::vector<double>& samples,
                                       double level = 0.95);

// Mean and 95% half-width per metric across runs (e.g. CV folds).
struct RunSummary {
  std::vector<std::string> metric_names;
  std::vector<std::vector<double>> samples;  // per metric

  ConfidenceInterval summarize(std::size_t metric) const;
  std::string to_string() const;
};

}  // namespace tsetlin
