#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "catclass/dataset/schema.hpp"

namespace catclass {

/// A record's predicted probability for the positive class and whether it
/// actually belongs to that class.
struct ScoredRecord {
  double score;
  bool positive;
};

enum class CurveKind { roc, lift, calibration };

std::string_view curve_kind_id(CurveKind kind) noexcept;

struct CurvePoint {
  double x;
  double y;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveSeries {
  CurveKind kind;
  ClassIndex positive_class = 0;
  std::vector<CurvePoint> points;
  std::optional<double> auc;  // roc only
};

/// One-vs-rest scores for `positive` from per-record probability vectors.
std::vector<ScoredRecord> one_vs_rest(const std::vector<std::vector<double>>& proba,
                                      std::span<const ClassIndex> actual, ClassIndex positive);

/// (FPR, TPR) after each distinct score threshold, highest first, starting at
/// (0,0). Tied scores move as one block. AUC by the trapezoid rule.
/// Throws InvalidArgument unless both positives and negatives are present.
CurveSeries roc_points(std::span<const ScoredRecord> scores, ClassIndex positive_class = 0);

/// (i/N, precision of the top i / prevalence) for i = 1..N, ranking by score
/// descending with ties kept in input order. Throws without positives.
CurveSeries lift_points(std::span<const ScoredRecord> scores, ClassIndex positive_class = 0);

/// Equal-width bins over [0,1]; bin 0 is [0, 1/b], bin k is (k/b, (k+1)/b].
/// Each nonempty bin yields (mean score, positive fraction).
/// Throws on empty input, bins < 2, or scores outside [0,1].
CurveSeries calibration_points(std::span<const ScoredRecord> scores, std::size_t bins = 10,
                               ClassIndex positive_class = 0);

}  // namespace catclass
