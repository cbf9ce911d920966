#include "catclass/classifiers/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "catclass/error.hpp"

namespace catclass {

std::size_t CountTable::column_sum(ClassIndex c) const {
  std::size_t s = 0;
  for (std::size_t v = 0; v < values_; ++v) s += counts_[v * classes_ + c];
  return s;
}

NaiveBayesModel::NaiveBayesModel(std::shared_ptr<const AttributeSchema> schema,
                                 ClassDistribution class_counts, std::vector<CountTable> tables,
                                 double alpha)
    : schema_(std::move(schema)),
      class_counts_(std::move(class_counts)),
      tables_(std::move(tables)),
      alpha_(alpha) {
  if (!schema_) throw InvalidArgument("naive bayes model requires a schema");
  if (!std::isfinite(alpha_) || alpha_ < 0.0) throw InvalidArgument("naive bayes alpha must be >= 0");
  const auto& s = *schema_;
  if (class_counts_.size() != s.class_count()) throw InvalidArgument("class count vector has wrong length");
  if (class_counts_.total() == 0) throw InvalidArgument("naive bayes model has no training records");
  if (tables_.size() != s.feature_count()) throw InvalidArgument("one count table per attribute required");
  for (std::size_t j = 0; j < tables_.size(); ++j) {
    const auto& t = tables_[j];
    if (t.values() != s.feature(j).size() || t.classes() != s.class_count()) {
      throw InvalidArgument("count table for '" + s.feature(j).name + "' has wrong shape");
    }
    for (ClassIndex c = 0; c < s.class_count(); ++c) {
      if (t.column_sum(c) != class_counts_[c]) {
        throw InvalidArgument("count table for '" + s.feature(j).name +
                              "' disagrees with the class counts");
      }
    }
  }
}

NaiveBayesModel NaiveBayesModel::train(const Dataset& data, double alpha) {
  if (data.empty()) throw InvalidArgument("naive bayes: empty training set");
  if (!data.labeled()) throw InvalidArgument("naive bayes: training data must be labeled");
  const auto& s = data.schema();
  std::vector<CountTable> tables;
  tables.reserve(s.feature_count());
  for (const auto& f : s.features()) tables.emplace_back(f.size(), s.class_count());
  for (const auto& r : data.records()) {
    for (std::size_t j = 0; j < r.values.size(); ++j) ++tables[j].at(r.values[j], *r.label);
  }
  return NaiveBayesModel(data.schema_ptr(), catclass::class_counts(data), std::move(tables), alpha);
}

std::vector<double> NaiveBayesModel::predict_proba(const Record& x) const {
  check_record(*schema_, x);
  const auto classes = schema_->class_count();
  const auto n = static_cast<double>(class_counts_.total());
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  // Log space keeps long products away from underflow.
  std::vector<double> log_score(classes, kNegInf);
  for (ClassIndex c = 0; c < classes; ++c) {
    const auto nc = static_cast<double>(class_counts_[c]);
    if (nc == 0.0) continue;
    double acc = std::log(nc / n);
    for (std::size_t j = 0; j < tables_.size() && acc != kNegInf; ++j) {
      const double num = static_cast<double>(tables_[j].at(x.values[j], c)) + alpha_;
      const double den = nc + alpha_ * static_cast<double>(tables_[j].values());
      acc = num == 0.0 ? kNegInf : acc + std::log(num / den);
    }
    log_score[c] = acc;
  }

  const double top = *std::max_element(log_score.begin(), log_score.end());
  if (top == kNegInf) return class_counts_.normalized();

  std::vector<double> proba(classes, 0.0);
  double sum = 0.0;
  for (ClassIndex c = 0; c < classes; ++c) {
    if (log_score[c] == kNegInf) continue;
    proba[c] = std::exp(log_score[c] - top);
    sum += proba[c];
  }
  for (auto& p : proba) p /= sum;
  return proba;
}

}  // namespace catclass
