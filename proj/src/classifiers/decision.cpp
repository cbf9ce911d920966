#include "catclass/classifiers/decision.hpp"

#include <cmath>
#include <string>

#include "catclass/error.hpp"

namespace catclass {

ClassIndex predict_label(std::span<const double> proba) {
  if (proba.empty()) throw InvalidArgument("empty probability vector");
  double sum = 0.0;
  ClassIndex best = 0;
  for (std::size_t c = 0; c < proba.size(); ++c) {
    if (!(proba[c] >= 0.0)) throw InvalidArgument("probability vector has a negative or NaN entry");
    sum += proba[c];
    if (proba[c] > proba[best]) best = static_cast<ClassIndex>(c);
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw InvalidArgument("probability vector sums to " + std::to_string(sum));
  }
  return best;
}

}  // namespace catclass
