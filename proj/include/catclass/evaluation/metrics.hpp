#pragma once

#include "catclass/evaluation/confusion_matrix.hpp"

namespace catclass {

/// A ratio that may have a zero denominator. Undefined values hold 0 so
/// downstream arithmetic stays total; writers render them as "NA".
struct MetricValue {
  double value = 0.0;
  bool defined = true;

  static MetricValue ratio(double num, double den) {
    return den == 0.0 ? MetricValue{0.0, false} : MetricValue{num / den, true};
  }
};

/// One-vs-rest metrics for a designated positive class, plus overall CA.
struct PerClassMetrics {
  ClassIndex positive = 0;
  std::size_t tp = 0, fn = 0, fp = 0, tn = 0;
  double ca = 0.0;
  MetricValue sensitivity;
  MetricValue specificity;
  MetricValue precision;
  MetricValue recall;
  MetricValue f1;
};

/// trace / N. Throws InvalidArgument for an empty matrix.
double class_accuracy(const ConfusionMatrix& m);

/// Throws InvalidArgument for an empty matrix or an out-of-range class.
PerClassMetrics per_class_metrics(const ConfusionMatrix& m, ClassIndex positive);

}  // namespace catclass
