#include "catclass/evaluation/confusion_matrix.hpp"

#include <numeric>

#include "catclass/error.hpp"

namespace catclass {

ConfusionMatrix ConfusionMatrix::from_rows(const std::vector<std::vector<std::size_t>>& rows) {
  if (rows.empty()) throw InvalidArgument("confusion matrix needs at least one class");
  ConfusionMatrix m(rows.size());
  for (ClassIndex a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != rows.size()) throw InvalidArgument("confusion matrix rows must be square");
    for (ClassIndex p = 0; p < rows.size(); ++p) m.add(a, p, rows[a][p]);
  }
  return m;
}

void ConfusionMatrix::add(ClassIndex actual, ClassIndex predicted, std::size_t n) {
  if (actual >= classes_ || predicted >= classes_) throw InvalidArgument("class index out of range");
  counts_[actual * classes_ + predicted] += n;
}

std::size_t ConfusionMatrix::at(ClassIndex actual, ClassIndex predicted) const {
  if (actual >= classes_ || predicted >= classes_) throw InvalidArgument("class index out of range");
  return counts_[actual * classes_ + predicted];
}

std::size_t ConfusionMatrix::row_sum(ClassIndex actual) const {
  std::size_t s = 0;
  for (ClassIndex p = 0; p < classes_; ++p) s += at(actual, p);
  return s;
}

std::size_t ConfusionMatrix::column_sum(ClassIndex predicted) const {
  std::size_t s = 0;
  for (ClassIndex a = 0; a < classes_; ++a) s += at(a, predicted);
  return s;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t s = 0;
  for (ClassIndex c = 0; c < classes_; ++c) s += at(c, c);
  return s;
}

std::size_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

ClassDistribution ConfusionMatrix::actual_counts() const {
  ClassDistribution d(classes_);
  for (ClassIndex a = 0; a < classes_; ++a) d.counts[a] = row_sum(a);
  return d;
}

}  // namespace catclass
