#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catclass/classifiers/hyperparams.hpp"
#include "catclass/evaluation/cross_validate.hpp"
#include "catclass/evaluation/curves.hpp"
#include "catclass/evaluation/metrics.hpp"

namespace catclass {

/// Everything produced by one evaluation run, self-contained: labels,
/// provenance, the pooled matrix, per-class metrics and curves.
struct EvaluationReport {
  Algorithm algorithm;
  Hyperparams params;
  Protocol protocol;
  std::string protocol_text;
  std::vector<std::string> class_labels;
  ConfusionMatrix matrix;
  std::vector<PerClassMetrics> metrics;  // class order
  /// Curves per class in class order, kinds in roc, lift, calibration order.
  /// A kind is absent for a class when it is undefined (e.g. no positives).
  std::vector<CurveSeries> curves;
  /// Fraction of the majority class, for context.
  double majority_baseline = 0.0;
};

/// Metrics computed from a matrix alone (no curves, no provenance).
std::vector<PerClassMetrics> metrics_for_all_classes(const ConfusionMatrix& m);

/// Runs cross_validate and derives every metric and pooled curve.
EvaluationReport evaluate(const Dataset& data, Algorithm algo, const Hyperparams& params,
                          const Protocol& protocol, unsigned threads = 1, std::size_t calibration_bins = 10);

}  // namespace catclass
