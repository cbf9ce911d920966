#include "catclass/evaluation/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "catclass/error.hpp"

namespace catclass {
namespace {

/// Indices sorted by score descending; equal scores keep input order.
std::vector<std::size_t> ranking(std::span<const ScoredRecord> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a].score > scores[b].score; });
  return order;
}

std::size_t count_positive(std::span<const ScoredRecord> scores) {
  return static_cast<std::size_t>(
      std::count_if(scores.begin(), scores.end(), [](const auto& s) { return s.positive; }));
}

}  // namespace

std::string_view curve_kind_id(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::roc:
      return "roc";
    case CurveKind::lift:
      return "lift";
    case CurveKind::calibration:
      return "calibration";
  }
  return "unknown";
}

std::vector<ScoredRecord> one_vs_rest(const std::vector<std::vector<double>>& proba,
                                      std::span<const ClassIndex> actual, ClassIndex positive) {
  if (proba.size() != actual.size()) throw InvalidArgument("one_vs_rest: length mismatch");
  std::vector<ScoredRecord> out;
  out.reserve(proba.size());
  for (std::size_t i = 0; i < proba.size(); ++i) {
    out.push_back({proba[i].at(positive), actual[i] == positive});
  }
  return out;
}

CurveSeries roc_points(std::span<const ScoredRecord> scores, ClassIndex positive_class) {
  const auto pos = count_positive(scores);
  const auto neg = scores.size() - pos;
  if (pos == 0 || neg == 0) throw InvalidArgument("roc needs at least one positive and one negative record");

  const auto order = ranking(scores);
  CurveSeries out{CurveKind::roc, positive_class, {{0.0, 0.0}}, std::nullopt};
  std::size_t tp = 0, fp = 0;
  double area = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    const double s = scores[order[i]].score;
    for (; i < order.size() && scores[order[i]].score == s; ++i) {
      (scores[order[i]].positive ? tp : fp) += 1;
    }
    const CurvePoint p{static_cast<double>(fp) / static_cast<double>(neg),
                       static_cast<double>(tp) / static_cast<double>(pos)};
    const auto& last = out.points.back();
    area += (p.x - last.x) * (p.y + last.y) / 2.0;
    out.points.push_back(p);
  }
  out.auc = area;
  return out;
}

CurveSeries lift_points(std::span<const ScoredRecord> scores, ClassIndex positive_class) {
  const auto pos = count_positive(scores);
  if (pos == 0) throw InvalidArgument("lift needs at least one positive record");
  const double n = static_cast<double>(scores.size());
  const double prevalence = static_cast<double>(pos) / n;

  CurveSeries out{CurveKind::lift, positive_class, {}, std::nullopt};
  out.points.reserve(scores.size());
  std::size_t tp = 0, i = 0;
  for (auto idx : ranking(scores)) {
    ++i;
    tp += scores[idx].positive ? 1 : 0;
    const double precision = static_cast<double>(tp) / static_cast<double>(i);
    out.points.push_back({static_cast<double>(i) / n, precision / prevalence});
  }
  return out;
}

CurveSeries calibration_points(std::span<const ScoredRecord> scores, std::size_t bins,
                               ClassIndex positive_class) {
  if (scores.empty()) throw InvalidArgument("calibration needs at least one record");
  if (bins < 2) throw InvalidArgument("calibration needs at least 2 bins");
  std::vector<double> score_sum(bins, 0.0);
  std::vector<std::size_t> members(bins, 0), positives(bins, 0);
  for (const auto& s : scores) {
    if (!(s.score >= 0.0 && s.score <= 1.0)) throw InvalidArgument("calibration score outside [0,1]");
    const auto raw = std::ceil(s.score * static_cast<double>(bins)) - 1.0;
    const auto bin = static_cast<std::size_t>(std::clamp(raw, 0.0, static_cast<double>(bins - 1)));
    score_sum[bin] += s.score;
    ++members[bin];
    positives[bin] += s.positive ? 1 : 0;
  }
  CurveSeries out{CurveKind::calibration, positive_class, {}, std::nullopt};
  for (std::size_t b = 0; b < bins; ++b) {
    if (members[b] == 0) continue;
    const auto m = static_cast<double>(members[b]);
    out.points.push_back({std::clamp(score_sum[b] / m, 0.0, 1.0), static_cast<double>(positives[b]) / m});
  }
  return out;
}

}  // namespace catclass
