#include "catclass/evaluation/report.hpp"

#include <algorithm>

#include "catclass/error.hpp"

namespace catclass {

std::vector<PerClassMetrics> metrics_for_all_classes(const ConfusionMatrix& m) {
  std::vector<PerClassMetrics> out;
  out.reserve(m.classes());
  for (ClassIndex c = 0; c < m.classes(); ++c) out.push_back(per_class_metrics(m, c));
  return out;
}

EvaluationReport evaluate(const Dataset& data, Algorithm algo, const Hyperparams& params,
                          const Protocol& protocol, unsigned threads, std::size_t calibration_bins) {
  auto cv = cross_validate(data, algo, params, protocol, threads);

  std::vector<ClassIndex> actual;
  actual.reserve(data.size());
  for (const auto& r : data.records()) actual.push_back(*r.label);

  EvaluationReport report{algo,
                          params,
                          protocol,
                          protocol.describe(data.size()),
                          data.schema().target().domain,
                          cv.matrix,
                          metrics_for_all_classes(cv.matrix),
                          {},
                          0.0};
  const auto margins = cv.matrix.actual_counts();
  report.majority_baseline = static_cast<double>(*std::max_element(margins.counts.begin(), margins.counts.end())) /
                             static_cast<double>(margins.total());

  for (ClassIndex c = 0; c < data.schema().class_count(); ++c) {
    const auto scores = one_vs_rest(cv.proba, actual, c);
    const auto positives = margins[c];
    if (positives > 0 && positives < data.size()) report.curves.push_back(roc_points(scores, c));
    if (positives > 0) report.curves.push_back(lift_points(scores, c));
    report.curves.push_back(calibration_points(scores, calibration_bins, c));
  }
  return report;
}

}  // namespace catclass
