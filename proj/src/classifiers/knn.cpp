#include "catclass/classifiers/knn.hpp"

#include <algorithm>
#include <string>

#include "catclass/error.hpp"

namespace catclass {

std::size_t hamming_distance(const Record& a, const Record& b) {
  if (a.values.size() != b.values.size()) {
    throw InvalidArgument("hamming_distance: records of length " + std::to_string(a.values.size()) +
                          " and " + std::to_string(b.values.size()));
  }
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.values.size(); ++j) d += a.values[j] != b.values[j] ? 1 : 0;
  return d;
}

KnnModel::KnnModel(std::shared_ptr<const AttributeSchema> schema, std::vector<Record> training,
                   std::size_t k)
    : schema_(std::move(schema)), training_(std::move(training)), k_(k) {
  if (!schema_) throw InvalidArgument("knn model requires a schema");
  if (k_ < 1) throw InvalidArgument("knn k must be >= 1");
  if (training_.empty()) throw InvalidArgument("knn model needs at least one training record");
  for (const auto& r : training_) {
    check_record(*schema_, r);
    if (!r.label) throw InvalidArgument("knn training records must be labeled");
  }
}

KnnModel KnnModel::train(const Dataset& data, std::size_t k) {
  return KnnModel(data.schema_ptr(), data.records(), k);
}

std::vector<std::size_t> KnnModel::neighbours(const Record& x) const {
  check_record(*schema_, x);
  // Distances are bounded by the feature count, so bucketing by distance in
  // training order gives the (distance, position) ordering in linear time.
  std::vector<std::vector<std::size_t>> buckets(schema_->feature_count() + 1);
  for (std::size_t i = 0; i < training_.size(); ++i) {
    buckets[hamming_distance(training_[i], x)].push_back(i);
  }
  const auto take = std::min(k_, training_.size());
  std::vector<std::size_t> out;
  out.reserve(take);
  for (const auto& bucket : buckets) {
    for (auto i : bucket) {
      if (out.size() == take) return out;
      out.push_back(i);
    }
  }
  return out;
}

std::vector<double> KnnModel::predict_proba(const Record& x) const {
  const auto picked = neighbours(x);
  std::vector<std::size_t> votes(schema_->class_count(), 0);
  for (auto i : picked) ++votes[*training_[i].label];
  std::vector<double> proba(votes.size());
  const auto n = static_cast<double>(picked.size());
  for (std::size_t c = 0; c < votes.size(); ++c) proba[c] = static_cast<double>(votes[c]) / n;
  return proba;
}

}  // namespace catclass
