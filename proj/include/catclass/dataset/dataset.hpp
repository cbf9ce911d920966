#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "catclass/dataset/schema.hpp"

namespace catclass {

/// One row: a domain index per feature attribute and an optional class label.
struct Record {
  std::vector<ValueIndex> values;
  std::optional<ClassIndex> label;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Per-class record counts in class order.
struct ClassDistribution {
  std::vector<std::size_t> counts;

  ClassDistribution() = default;
  explicit ClassDistribution(std::size_t classes) : counts(classes, 0) {}
  explicit ClassDistribution(std::vector<std::size_t> c) : counts(std::move(c)) {}

  std::size_t total() const noexcept;
  std::size_t size() const noexcept { return counts.size(); }
  std::size_t operator[](ClassIndex c) const { return counts.at(c); }

  /// Counts divided by the total. Requires total() > 0.
  std::vector<double> normalized() const;

  friend bool operator==(const ClassDistribution&, const ClassDistribution&) = default;
};

/// Validated record table over a shared schema. Either every record carries a
/// label or none does. Immutable once built.
class Dataset {
 public:
  /// `labeled` is inferred from the records unless given; an explicit value
  /// must agree with every record.
  Dataset(std::shared_ptr<const AttributeSchema> schema, std::vector<Record> records,
          std::optional<bool> labeled = std::nullopt);

  const AttributeSchema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const AttributeSchema>& schema_ptr() const noexcept { return schema_; }
  const std::vector<Record>& records() const noexcept { return records_; }
  const Record& operator[](std::size_t i) const { return records_.at(i); }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  bool labeled() const noexcept { return labeled_; }

  /// Records at the given positions, in the order given.
  Dataset subset(const std::vector<std::size_t>& indices) const;

 private:
  std::shared_ptr<const AttributeSchema> schema_;
  std::vector<Record> records_;
  bool labeled_ = false;
};

/// Throws InvalidArgument if the record does not fit the schema.
void check_record(const AttributeSchema& schema, const Record& record);

enum class LabelMode { labeled, unlabeled, detect };

/// Parses comma-separated data whose header names the schema features in
/// order, followed by the target column when labeled. Cells are matched
/// exactly after normalize_label. Blank lines are skipped; a completely empty
/// stream yields an empty dataset. Errors are DataError with the file line.
Dataset parse_csv(std::istream& source, std::shared_ptr<const AttributeSchema> schema,
                  LabelMode mode = LabelMode::labeled);

/// Writes the format read by parse_csv; the target column is present iff
/// the dataset is labeled.
void write_csv(std::ostream& sink, const Dataset& data);

/// Throws InvalidArgument for unlabeled data.
ClassDistribution class_counts(const Dataset& data);

/// Rows follow the attribute's domain order, columns the class order.
struct CrossTab {
  std::string attribute;
  std::vector<std::string> row_labels;
  std::vector<std::string> class_labels;
  std::vector<ClassDistribution> rows;

  std::size_t total() const noexcept;
};

/// Attribute value by class frequency table. Every domain value gets a row,
/// including values that never occur. The target is not a valid attribute.
CrossTab crosstab(const Dataset& data, std::string_view attribute);

}  // namespace catclass
