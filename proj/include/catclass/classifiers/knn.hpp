#pragma once

#include <memory>
#include <vector>

#include "catclass/dataset/dataset.hpp"

namespace catclass {

/// Overlap distance: number of feature positions whose indices differ.
/// Throws InvalidArgument when the records have different lengths.
std::size_t hamming_distance(const Record& a, const Record& b);

/// Instance store for k-nearest-neighbour voting under hamming_distance.
///
/// The k nearest records are taken in (distance, training position) order, so
/// at the k-boundary earlier training records win. Voting is unweighted and
/// uses min(k, N) neighbours.
class KnnModel {
 public:
  /// `training` must be nonempty and labeled.
  KnnModel(std::shared_ptr<const AttributeSchema> schema, std::vector<Record> training, std::size_t k);

  static KnnModel train(const Dataset& data, std::size_t k);

  std::vector<double> predict_proba(const Record& x) const;

  /// Training positions of the neighbours used for `x`, nearest first.
  std::vector<std::size_t> neighbours(const Record& x) const;

  const AttributeSchema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const AttributeSchema>& schema_ptr() const noexcept { return schema_; }
  const std::vector<Record>& training() const noexcept { return training_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::shared_ptr<const AttributeSchema> schema_;
  std::vector<Record> training_;
  std::size_t k_;
};

}  // namespace catclass
