#pragma once

#include <optional>
#include <vector>

#include "catclass/classifiers/model.hpp"
#include "catclass/evaluation/confusion_matrix.hpp"
#include "catclass/evaluation/folds.hpp"

namespace catclass {

struct CrossValidationResult {
  ConfusionMatrix matrix;
  /// Held-out class probabilities, indexed by record.
  std::vector<std::vector<double>> proba;
  std::vector<ClassIndex> predicted;
  std::optional<FoldAssignment> folds;
};

/// Trains on each fold's complement and predicts the fold. Every record gets
/// exactly one prediction. With `threads` > 1 folds are evaluated
/// concurrently; results are written back by record index, so the output
/// does not depend on scheduling.
///
/// k-fold needs a seed unless folds == N (leave-one-out is not randomized).
CrossValidationResult cross_validate(const Dataset& data, Algorithm algo, const Hyperparams& params,
                                     const Protocol& protocol, unsigned threads = 1);

}  // namespace catclass
