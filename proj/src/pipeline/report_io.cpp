#include "catclass/pipeline/report_io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "catclass/classifiers/decision.hpp"
#include "catclass/error.hpp"

namespace catclass::pipeline {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, '\t')) cells.push_back(normalize_label(cell));
  if (!line.empty() && line.back() == '\t') cells.emplace_back();
  return cells;
}

std::size_t parse_count(const std::string& cell, std::size_t line_no) {
  if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos) {
    throw DataError("line " + std::to_string(line_no) + ": '" + cell + "' is not a count", line_no, "");
  }
  return std::stoull(cell);
}

}  // namespace

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string format_metric(const MetricValue& v) { return v.defined ? format_fixed(v.value) : "NA"; }

std::string file_slug(std::string_view label) {
  std::string out;
  for (char ch : label) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      out.push_back(static_cast<char>(std::tolower(c)));
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "class" : out;
}

void write_metrics_table(std::ostream& sink, const std::vector<std::string>& class_labels,
                         const std::vector<PerClassMetrics>& metrics) {
  sink << "class\tCA\tSens\tSpec\tF1\tPrec\tRecall\n";
  for (const auto& m : metrics) {
    sink << class_labels.at(m.positive) << '\t' << format_fixed(m.ca) << '\t' << format_metric(m.sensitivity)
         << '\t' << format_metric(m.specificity) << '\t' << format_metric(m.f1) << '\t'
         << format_metric(m.precision) << '\t' << format_metric(m.recall) << '\n';
  }
}

void write_confusion_table(std::ostream& sink, const std::vector<std::string>& class_labels,
                           const ConfusionMatrix& m) {
  sink << "actual\\predicted";
  for (const auto& l : class_labels) sink << '\t' << l;
  sink << "\ttotal\n";
  for (ClassIndex a = 0; a < m.classes(); ++a) {
    sink << class_labels.at(a);
    for (ClassIndex p = 0; p < m.classes(); ++p) sink << '\t' << m.at(a, p);
    sink << '\t' << m.row_sum(a) << '\n';
  }
  sink << "total";
  for (ClassIndex p = 0; p < m.classes(); ++p) sink << '\t' << m.column_sum(p);
  sink << '\t' << m.total() << '\n';
}

LabeledMatrix read_confusion_table(std::istream& source) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> rows;
  std::optional<std::vector<std::size_t>> total_row;
  bool total_column = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (normalize_label(line).empty() || line.front() == '#') continue;
    auto cells = split_tabs(line);
    if (labels.empty()) {
      if (cells.size() < 3) throw DataError("matrix header needs at least two class columns", line_no, "");
      labels.assign(cells.begin() + 1, cells.end());
      if (labels.back() == "total") {
        labels.pop_back();
        total_column = true;
      }
      continue;
    }
    const auto expected = labels.size() + 1 + (total_column ? 1 : 0);
    if (cells.size() != expected) {
      throw DataError("line " + std::to_string(line_no) + ": " + std::to_string(cells.size()) +
                          " cells, expected " + std::to_string(expected),
                      line_no, "");
    }
    std::vector<std::size_t> counts;
    for (std::size_t j = 1; j < cells.size(); ++j) counts.push_back(parse_count(cells[j], line_no));
    if (cells[0] == "total") {
      total_row = std::move(counts);
      continue;
    }
    if (total_row) throw DataError("line " + std::to_string(line_no) + ": row after the total row", line_no, "");
    if (rows.size() >= labels.size() || cells[0] != labels[rows.size()]) {
      throw DataError("line " + std::to_string(line_no) + ": row label '" + cells[0] +
                          "' does not follow the header's class order",
                      line_no, cells[0]);
    }
    if (total_column) {
      const auto stated = counts.back();
      counts.pop_back();
      std::size_t sum = 0;
      for (auto c : counts) sum += c;
      if (sum != stated) {
        throw DataError("line " + std::to_string(line_no) + ": row total " + std::to_string(stated) +
                            " disagrees with the counts (" + std::to_string(sum) + ")",
                        line_no, "total");
      }
    }
    rows.push_back(std::move(counts));
  }
  if (labels.empty()) throw DataError("empty matrix file");
  if (rows.size() != labels.size()) {
    throw DataError("matrix has " + std::to_string(rows.size()) + " rows for " + std::to_string(labels.size()) +
                    " classes");
  }
  auto m = ConfusionMatrix::from_rows(rows);
  if (total_row) {
    for (ClassIndex p = 0; p < labels.size(); ++p) {
      if ((*total_row)[p] != m.column_sum(p)) throw DataError("total row disagrees with the column sums");
    }
    if (total_column && total_row->back() != m.total()) throw DataError("grand total disagrees with the counts");
  }
  return {std::move(labels), std::move(m)};
}

void write_curve_csv(std::ostream& sink, const CurveSeries& series, std::string_view class_label,
                     std::string_view algorithm) {
  sink << "# kind=" << curve_kind_id(series.kind) << ",class=" << class_label << ",algorithm=" << algorithm;
  if (series.auc) sink << ",auc=" << format_fixed(*series.auc, 6);
  sink << '\n';
  for (const auto& p : series.points) sink << format_fixed(p.x, 6) << ',' << format_fixed(p.y, 6) << '\n';
}

void write_predictions(std::ostream& sink, const AttributeSchema& schema,
                       const std::vector<std::vector<double>>& proba) {
  if (proba.empty()) return;
  sink << "row\tpredicted";
  for (const auto& l : schema.target().domain) sink << '\t' << l;
  sink << '\n';
  for (std::size_t i = 0; i < proba.size(); ++i) {
    sink << (i + 1) << '\t' << schema.class_label(predict_label(proba[i]));
    for (double p : proba[i]) sink << '\t' << format_fixed(p);
    sink << '\n';
  }
}

void write_crosstab(std::ostream& sink, const CrossTab& tab) {
  sink << tab.attribute;
  for (const auto& l : tab.class_labels) sink << '\t' << l;
  sink << "\ttotal\n";
  for (std::size_t v = 0; v < tab.rows.size(); ++v) {
    sink << tab.row_labels[v];
    for (auto n : tab.rows[v].counts) sink << '\t' << n;
    sink << '\t' << tab.rows[v].total() << '\n';
  }
}

}  // namespace catclass::pipeline
