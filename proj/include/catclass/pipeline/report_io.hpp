#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "catclass/dataset/dataset.hpp"
#include "catclass/evaluation/report.hpp"

namespace catclass::pipeline {

/// Fixed 4-decimal rendering; "NA" for undefined values.
std::string format_metric(const MetricValue& v);
std::string format_fixed(double v, int decimals = 4);

/// "Possible participation" -> "possible_participation".
std::string file_slug(std::string_view label);

/// Tab-separated, one row per class:
///   class  CA  Sens  Spec  F1  Prec  Recall
void write_metrics_table(std::ostream& sink, const std::vector<std::string>& class_labels,
                         const std::vector<PerClassMetrics>& metrics);

/// Tab-separated matrix with margins, actual by row:
///   actual\predicted  <class...>  total
///   <class>           <counts...> <row sum>
///   total             <col sums>  N
void write_confusion_table(std::ostream& sink, const std::vector<std::string>& class_labels,
                           const ConfusionMatrix& m);

struct LabeledMatrix {
  std::vector<std::string> class_labels;
  ConfusionMatrix matrix;
};

/// Reads the write_confusion_table layout. Margin row/column are optional but
/// must agree with the counts when present. Blank lines and lines starting
/// with '#' are ignored. Throws DataError.
LabeledMatrix read_confusion_table(std::istream& source);

/// One header line "# kind=<k>,class=<label>,algorithm=<id>[,auc=<v>]"
/// then "x,y" rows with 6 decimals.
void write_curve_csv(std::ostream& sink, const CurveSeries& series, std::string_view class_label,
                     std::string_view algorithm);

/// Row index (1-based), predicted label, then one probability column per class.
/// Writes nothing at all for an empty prediction set.
void write_predictions(std::ostream& sink, const AttributeSchema& schema,
                       const std::vector<std::vector<double>>& proba);

/// Crosstab as a text table with class columns and a total column.
void write_crosstab(std::ostream& sink, const CrossTab& tab);

}  // namespace catclass::pipeline
