#pragma once

#include <span>

#include "catclass/dataset/schema.hpp"

namespace catclass {

/// Tolerance on the sum of a probability vector.
inline constexpr double kProbabilitySumTolerance = 1e-9;

/// Argmax of a class-probability vector; the earliest class wins ties.
/// Throws InvalidArgument for an empty vector, negative entries, or a sum
/// further than kProbabilitySumTolerance from 1.
ClassIndex predict_label(std::span<const double> proba);

}  // namespace catclass
