#include "catclass/pipeline/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "catclass/error.hpp"
#include "catclass/pipeline/report_io.hpp"

namespace catclass::pipeline {
namespace {

constexpr double kLeft = 50.0;
constexpr double kTop = 30.0;
constexpr double kSide = 340.0;

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void emit_curve_svg(std::ostream& sink, const CurveSeries& series, std::string_view title) {
  if (series.points.size() < 2) throw InvalidArgument("a curve plot needs at least 2 points");

  double y_max = 1.0;
  if (series.kind == CurveKind::lift) {
    for (const auto& p : series.points) y_max = std::max(y_max, p.y);
    y_max = std::ceil(y_max);
  }
  auto px = [](double x) { return format_fixed(kLeft + x * kSide, 2); };
  auto py = [y_max](double y) { return format_fixed(kTop + kSide - y / y_max * kSide, 2); };

  const auto kind = curve_kind_id(series.kind);
  const char* x_label = series.kind == CurveKind::roc ? "false positive rate"
                        : series.kind == CurveKind::lift ? "fraction of records" : "mean predicted probability";
  const char* y_label = series.kind == CurveKind::roc ? "true positive rate"
                        : series.kind == CurveKind::lift ? "lift" : "observed positive fraction";

  sink << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\" viewBox=\"0 0 420 420\">\n";
  sink << "<title>" << escape(title) << "</title>\n";
  sink << "<rect x=\"0\" y=\"0\" width=\"420\" height=\"420\" fill=\"#fff\"/>\n";
  sink << "<text x=\"210\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
       << escape(title) << "</text>\n";
  sink << "<rect x=\"" << px(0) << "\" y=\"" << py(y_max) << "\" width=\"" << format_fixed(kSide, 2)
       << "\" height=\"" << format_fixed(kSide, 2) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  sink << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  sink << "<text x=\"" << px(0) << "\" y=\"" << format_fixed(kTop + kSide + 14, 2)
       << "\" text-anchor=\"middle\">0</text>\n";
  sink << "<text x=\"" << px(1) << "\" y=\"" << format_fixed(kTop + kSide + 14, 2)
       << "\" text-anchor=\"middle\">1</text>\n";
  sink << "<text x=\"" << format_fixed(kLeft - 6, 2) << "\" y=\"" << py(0) << "\" text-anchor=\"end\">0</text>\n";
  sink << "<text x=\"" << format_fixed(kLeft - 6, 2) << "\" y=\"" << py(y_max) << "\" text-anchor=\"end\">"
       << format_fixed(y_max, 0) << "</text>\n";
  sink << "<text x=\"" << px(0.5) << "\" y=\"" << format_fixed(kTop + kSide + 30, 2)
       << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  sink << "<text x=\"14\" y=\"" << py(y_max / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
       << py(y_max / 2) << ")\">" << y_label << "</text>\n";
  sink << "</g>\n";

  if (series.kind == CurveKind::lift) {
    sink << "<line x1=\"" << px(0) << "\" y1=\"" << py(1) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
         << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  } else {
    sink << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
         << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }

  sink << "<polyline class=\"" << kind << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    sink << (i ? " " : "") << px(series.points[i].x) << ',' << py(series.points[i].y);
  }
  sink << "\"/>\n";
  sink << "</svg>\n";
}

}  // namespace catclass::pipeline
