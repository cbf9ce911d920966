#pragma once

#include <iosfwd>
#include <string_view>

#include "catclass/evaluation/curves.hpp"

namespace catclass::pipeline {

/// Minimal standalone SVG: plot frame, axis ticks, dashed diagonal for roc
/// and calibration, and one polyline through the points. ROC and calibration
/// use the unit square; lift scales y to the largest value (at least 1).
/// Output depends only on the arguments. Throws InvalidArgument for fewer
/// than 2 points.
void emit_curve_svg(std::ostream& sink, const CurveSeries& series, std::string_view title);

}  // namespace catclass::pipeline
