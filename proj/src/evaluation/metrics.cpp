#include "catclass/evaluation/metrics.hpp"

#include "catclass/error.hpp"

namespace catclass {

double class_accuracy(const ConfusionMatrix& m) {
  const auto n = m.total();
  if (n == 0) throw InvalidArgument("class accuracy of an empty confusion matrix");
  return static_cast<double>(m.trace()) / static_cast<double>(n);
}

PerClassMetrics per_class_metrics(const ConfusionMatrix& m, ClassIndex positive) {
  if (positive >= m.classes()) throw InvalidArgument("positive class index out of range");
  PerClassMetrics r;
  r.positive = positive;
  r.ca = class_accuracy(m);
  r.tp = m.at(positive, positive);
  r.fn = m.row_sum(positive) - r.tp;
  r.fp = m.column_sum(positive) - r.tp;
  r.tn = m.total() - r.tp - r.fn - r.fp;

  const auto tp = static_cast<double>(r.tp);
  r.sensitivity = MetricValue::ratio(tp, tp + static_cast<double>(r.fn));
  r.recall = r.sensitivity;
  r.specificity = MetricValue::ratio(static_cast<double>(r.tn), static_cast<double>(r.tn + r.fp));
  r.precision = MetricValue::ratio(tp, tp + static_cast<double>(r.fp));
  const double p = r.precision.value;
  const double s = r.recall.value;
  r.f1 = MetricValue::ratio(2.0 * p * s, p + s);
  return r;
}

}  // namespace catclass
