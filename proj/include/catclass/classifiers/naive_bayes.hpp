#pragma once

#include <memory>
#include <vector>

#include "catclass/dataset/dataset.hpp"

namespace catclass {

/// Value-by-class counts for one attribute, row-major (value, class).
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::size_t values, std::size_t classes)
      : values_(values), classes_(classes), counts_(values * classes, 0) {}

  std::size_t values() const noexcept { return values_; }
  std::size_t classes() const noexcept { return classes_; }
  std::size_t at(ValueIndex v, ClassIndex c) const { return counts_.at(v * classes_ + c); }
  std::size_t& at(ValueIndex v, ClassIndex c) { return counts_.at(v * classes_ + c); }
  std::size_t column_sum(ClassIndex c) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::size_t values_ = 0;
  std::size_t classes_ = 0;
  std::vector<std::size_t> counts_;
};

/// Categorical naive Bayes with additive smoothing over each attribute's
/// full declared domain:
///
///   score(c) = n_c / N * prod_j (n(x_j, c) + alpha) / (n_c + alpha * |D_j|)
///
/// normalized to sum to one. Classes absent from training score 0. If every
/// class scores 0 (only possible with alpha = 0) the class priors are
/// returned instead.
class NaiveBayesModel {
 public:
  /// Builds from tallied counts; column sums of every table must match
  /// `class_counts`.
  NaiveBayesModel(std::shared_ptr<const AttributeSchema> schema, ClassDistribution class_counts,
                  std::vector<CountTable> tables, double alpha);

  /// Throws InvalidArgument on empty or unlabeled data.
  static NaiveBayesModel train(const Dataset& data, double alpha);

  std::vector<double> predict_proba(const Record& x) const;

  const AttributeSchema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const AttributeSchema>& schema_ptr() const noexcept { return schema_; }
  const ClassDistribution& class_counts() const noexcept { return class_counts_; }
  const std::vector<CountTable>& tables() const noexcept { return tables_; }
  const CountTable& table(std::size_t attribute) const { return tables_.at(attribute); }
  double alpha() const noexcept { return alpha_; }

 private:
  std::shared_ptr<const AttributeSchema> schema_;
  ClassDistribution class_counts_;
  std::vector<CountTable> tables_;
  double alpha_;
};

}  // namespace catclass
