#pragma once

#include <cstdint>
#include <vector>

#include "catclass/dataset/dataset.hpp"

namespace catclass {

/// C x C counts: rows are actual classes, columns predicted classes.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t classes) : classes_(classes), counts_(classes * classes, 0) {}

  /// Square, nonempty row lists. Throws InvalidArgument otherwise.
  static ConfusionMatrix from_rows(const std::vector<std::vector<std::size_t>>& rows);

  void add(ClassIndex actual, ClassIndex predicted, std::size_t n = 1);

  std::size_t classes() const noexcept { return classes_; }
  std::size_t at(ClassIndex actual, ClassIndex predicted) const;
  std::size_t row_sum(ClassIndex actual) const;
  std::size_t column_sum(ClassIndex predicted) const;
  std::size_t trace() const;
  std::size_t total() const;

  /// Actual-class margins as a distribution.
  ClassDistribution actual_counts() const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::size_t classes_;
  std::vector<std::size_t> counts_;
};

}  // namespace catclass
