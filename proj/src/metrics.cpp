#include "tsetlin/metrics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

namespace tsetlin {

MetricsReport macro_metrics(const std::vector<int>& predictions,
                            const std::vector<int>& labels,
                            std::size_t num_classes) {
  if (predictions.size() != labels.size())
    throw std::invalid_argument("predictions/labels length mismatch");
  if (num_classes == 0) throw std::invalid_argument("num_classes must be >= 1");

  MetricsReport r;
  r.total = predictions.size();
  r.confusion.assign(num_classes, std::vector<std::uint64_t>(num_classes, 0));
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    int y = labels[i], p = predictions[i];
    if (y < 0 || static_cast<std::size_t>(y) >= num_classes || p < 0 ||
        static_cast<std::size_t>(p) >= num_classes)
      throw std::invalid_argument("class ordinal out of range");
    ++r.confusion[static_cast<std::size_t>(y)][static_cast<std::size_t>(p)];
  }

  std::uint64_t trace = 0;
  r.per_class.resize(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) {
    ClassMetrics& m = r.per_class[c];
    m.true_positives = r.confusion[c][c];
    trace += m.true_positives;
    for (std::size_t o = 0; o < num_classes; ++o) {
      m.support += r.confusion[c][o];
      if (o != c) {
        m.false_negatives += r.confusion[c][o];
        m.false_positives += r.confusion[o][c];
      }
    }
    std::uint64_t predicted = m.true_positives + m.false_positives;
    m.precision_undefined = predicted == 0;
    m.precision = predicted
                      ? static_cast<double>(m.true_positives) / predicted
                      : 0.0;
    m.recall = m.support
                   ? static_cast<double>(m.true_positives) /
                         (m.true_positives + m.false_negatives)
                   : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    r.macro_precision += m.precision;
    r.macro_recall += m.recall;
    r.macro_f1 += m.f1;
  }
  r.macro_precision /= static_cast<double>(num_classes);
  r.macro_recall /= static_cast<double>(num_classes);
  r.macro_f1 /= static_cast<double>(num_classes);
  r.accuracy = r.total ? static_cast<double>(trace) / r.total : 0.0;
  return r;
}

ConfidenceInterval confidence_interval(const std::vector<double>& samples,
                                       double level) {
  if (samples.size() < 2)
    throw std::invalid_argument("confidence interval needs >= 2 samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= (n - 1.0);
  boost::math::students_t dist(n - 1.0);
  double t = boost::math::quantile(dist, 0.5 + level / 2.0);
  return {mean, t * std::sqrt(var / n)};
}

ConfidenceInterval RunSummary::summarize(std::size_t metric) const {
  return confidence_interval(samples.at(metric));
}

std::string RunSummary::to_string() const {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  for (std::size_t m = 0; m < metric_names.size(); ++m) {
    auto ci = summarize(m);
    out << metric_names[m] << ": " << ci.mean << " +/- " << ci.half_width
        << " (n=" << samples[m].size() << ")\n";
  }
  return out.str();
}

std::string MetricsReport::to_string(
    const std::vector<std::string>& labels) const {
  auto name = [&](std::size_t c) {
    return c < labels.size() ? labels[c] : "class " + std::to_string(c);
  };
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "accuracy: " << accuracy << "  (" << total << " examples)\n";
  out << "macro precision: " << macro_precision
      << "  macro recall: " << macro_recall << "  macro F1: " << macro_f1
      << "\n";
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    const auto& m = per_class[c];
    out << "  " << name(c) << ": precision=" << m.precision
        << (m.precision_undefined ? " (no predictions)" : "")
        << " recall=" << m.recall << " f1=" << m.f1
        << " support=" << m.support << "\n";
  }
  out << "confusion (rows=actual, cols=predicted):\n";
  for (const auto& row : confusion) {
    out << "   ";
    for (auto v : row) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string MetricsReport::to_json(
    const std::vector<std::string>& labels) const {
  nlohmann::json per = nlohmann::json::array();
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    const auto& m = per_class[c];
    per.push_back({{"class", c < labels.size() ? labels[c] : std::to_string(c)},
                   {"precision", m.precision},
                   {"precision_undefined", m.precision_undefined},
                   {"recall", m.recall},
                   {"f1", m.f1},
                   {"support", m.support},
                   {"true_positives", m.true_positives},
                   {"false_positives", m.false_positives},
                   {"false_negatives", m.false_negatives}});
  }
  return nlohmann::json{{"accuracy", accuracy},
                        {"macro_precision", macro_precision},
                        {"macro_recall", macro_recall},
                        {"macro_f1", macro_f1},
                        {"total", total},
                        {"per_class", per},
                        {"confusion", confusion}}
      .dump(2);
}

}  // namespace tsetlin
