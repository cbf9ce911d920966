#include "catclass/dataset/dataset.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "catclass/error.hpp"

namespace catclass {
namespace {

std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    cells.emplace_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

std::size_t ClassDistribution::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::vector<double> ClassDistribution::normalized() const {
  const auto n = total();
  if (n == 0) throw InvalidArgument("cannot normalize an empty class distribution");
  std::vector<double> p(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    p[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
  }
  return p;
}

void check_record(const AttributeSchema& schema, const Record& record) {
  if (record.values.size() != schema.feature_count()) {
    throw InvalidArgument("record has " + std::to_string(record.values.size()) +
                          " values, schema has " + std::to_string(schema.feature_count()) +
                          " features");
  }
  for (std::size_t j = 0; j < record.values.size(); ++j) {
    if (record.values[j] >= schema.feature(j).size()) {
      throw InvalidArgument("value index " + std::to_string(record.values[j]) +
                            " out of range for attribute '" + schema.feature(j).name + "'");
    }
  }
  if (record.label && *record.label >= schema.class_count()) {
    throw InvalidArgument("class index " + std::to_string(*record.label) + " out of range");
  }
}

Dataset::Dataset(std::shared_ptr<const AttributeSchema> schema, std::vector<Record> records,
                 std::optional<bool> labeled)
    : schema_(std::move(schema)), records_(std::move(records)) {
  if (!schema_) throw InvalidArgument("dataset requires a schema");
  std::size_t with_label = 0;
  for (const auto& r : records_) {
    check_record(*schema_, r);
    with_label += r.label.has_value() ? 1 : 0;
  }
  if (with_label != 0 && with_label != records_.size()) {
    throw InvalidArgument("dataset mixes labeled and unlabeled records");
  }
  labeled_ = with_label != 0;
  if (labeled) {
    if (!records_.empty() && *labeled != labeled_) {
      throw InvalidArgument(*labeled ? "dataset expected labeled records" : "dataset expected unlabeled records");
    }
    labeled_ = *labeled;
  }
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Record> picked;
  picked.reserve(indices.size());
  for (auto i : indices) picked.push_back(records_.at(i));
  return Dataset(schema_, std::move(picked), labeled_);
}

Dataset parse_csv(std::istream& source, std::shared_ptr<const AttributeSchema> schema,
                  LabelMode mode) {
  if (!schema) throw InvalidArgument("parse_csv requires a schema");
  const auto& s = *schema;

  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(source, line)) {
    ++line_no;
    if (!is_blank(line)) {
      have_header = true;
      break;
    }
  }
  if (!have_header) return Dataset(schema, {}, mode == LabelMode::labeled);

  auto header = split_commas(line);
  for (auto& h : header) h = normalize_label(h);
  const auto nf = s.feature_count();
  bool labeled = mode == LabelMode::labeled;
  if (mode == LabelMode::detect) labeled = header.size() == nf + 1;
  const auto ncols = nf + (labeled ? 1 : 0);
  if (header.size() != ncols) {
    throw DataError("line " + std::to_string(line_no) + ": header has " +
                        std::to_string(header.size()) + " columns, expected " + std::to_string(ncols),
                    line_no, "");
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    const auto& expected = j < nf ? s.feature(j).name : s.target().name;
    if (header[j] != expected) {
      throw DataError("line " + std::to_string(line_no) + ": header column " + std::to_string(j + 1) +
                          " is '" + header[j] + "', expected '" + expected + "'",
                      line_no, header[j]);
    }
  }

  std::vector<Record> records;
  while (std::getline(source, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto cells = split_commas(line);
    if (cells.size() != ncols) {
      throw DataError("line " + std::to_string(line_no) + " (record " + std::to_string(records.size() + 1) +
                          "): " + std::to_string(cells.size()) + " columns, expected " +
                          std::to_string(ncols),
                      line_no, "");
    }
    Record rec;
    rec.values.reserve(nf);
    for (std::size_t j = 0; j < ncols; ++j) {
      const auto& attr = j < nf ? s.feature(j) : s.target();
      const auto text = normalize_label(cells[j]);
      const auto where = "line " + std::to_string(line_no) + " (record " +
                         std::to_string(records.size() + 1) + "), column '" + attr.name + "'";
      if (text.empty()) throw DataError(where + ": empty cell", line_no, attr.name);
      auto idx = attr.find(text);
      if (!idx) throw DataError(where + ": unknown value '" + text + "'", line_no, attr.name);
      if (j < nf) {
        rec.values.push_back(*idx);
      } else {
        rec.label = *idx;
      }
    }
    records.push_back(std::move(rec));
  }
  return Dataset(schema, std::move(records), labeled);
}

void write_csv(std::ostream& sink, const Dataset& data) {
  const auto& s = data.schema();
  for (std::size_t j = 0; j < s.feature_count(); ++j) {
    sink << (j ? "," : "") << s.feature(j).name;
  }
  if (data.labeled()) sink << ',' << s.target().name;
  sink << '\n';
  for (const auto& r : data.records()) {
    for (std::size_t j = 0; j < r.values.size(); ++j) {
      sink << (j ? "," : "") << s.feature(j).domain[r.values[j]];
    }
    if (r.label) sink << ',' << s.class_label(*r.label);
    sink << '\n';
  }
}

ClassDistribution class_counts(const Dataset& data) {
  if (!data.labeled()) throw InvalidArgument("class_counts needs labeled data");
  ClassDistribution dist(data.schema().class_count());
  for (const auto& r : data.records()) ++dist.counts[*r.label];
  return dist;
}

std::size_t CrossTab::total() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.total();
  return n;
}

CrossTab crosstab(const Dataset& data, std::string_view attribute) {
  const auto& s = data.schema();
  const auto name = normalize_label(attribute);
  auto j = s.feature_index(name);
  if (!j) {
    if (name == s.target().name) {
      throw InvalidArgument("'" + name + "' is the target, not a feature attribute");
    }
    throw InvalidArgument("unknown attribute '" + name + "'");
  }
  if (!data.labeled()) throw InvalidArgument("crosstab needs labeled data");
  const auto& attr = s.feature(*j);
  CrossTab tab{attr.name, attr.domain, s.target().domain,
               std::vector<ClassDistribution>(attr.size(), ClassDistribution(s.class_count()))};
  for (const auto& r : data.records()) ++tab.rows[r.values[*j]].counts[*r.label];
  return tab;
}

}  // namespace catclass
