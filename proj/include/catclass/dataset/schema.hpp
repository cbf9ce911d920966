#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catclass {

using ValueIndex = std::uint32_t;
using ClassIndex = std::uint32_t;

/// A named categorical attribute with a closed, ordered value domain.
struct Attribute {
  std::string name;
  std::vector<std::string> domain;

  std::size_t size() const noexcept { return domain.size(); }
  std::optional<ValueIndex> find(std::string_view label) const;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Trim leading/trailing whitespace and collapse internal runs to one space.
/// Labels and names are always compared in this normalized form.
std::string normalize_label(std::string_view text);

/// Feature attributes in column order plus a separately designated target.
/// The class order is the target's domain order.
class AttributeSchema {
 public:
  /// Validates names and domains; throws SchemaError on violation.
  AttributeSchema(std::vector<Attribute> features, Attribute target);

  const std::vector<Attribute>& features() const noexcept { return features_; }
  const Attribute& feature(std::size_t i) const { return features_.at(i); }
  std::size_t feature_count() const noexcept { return features_.size(); }

  const Attribute& target() const noexcept { return target_; }
  std::size_t class_count() const noexcept { return target_.size(); }
  const std::string& class_label(ClassIndex c) const { return target_.domain.at(c); }

  std::optional<std::size_t> feature_index(std::string_view name) const;

  /// Stable 64-bit FNV-1a digest over names and domains, as 16 hex digits.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const AttributeSchema& a, const AttributeSchema& b) {
    return a.features_ == b.features_ && a.target_ == b.target_;
  }

 private:
  std::vector<Attribute> features_;
  Attribute target_;
  std::string fingerprint_;
};

/// Reads the JSON schema document:
///
///   { "format": "catclass-schema", "version": 1,
///     "attributes": [ { "name": "...", "values": ["...", ...] },
///                     ...,
///                     { "name": "...", "values": [...], "target": true } ] }
///
/// Exactly one entry carries "target": true; its position in the list is
/// irrelevant. Feature order and domain order follow the document.
AttributeSchema parse_schema(std::istream& source);
AttributeSchema parse_schema(std::string_view text);

/// Writes the document read by parse_schema (target listed last).
void write_schema(std::ostream& sink, const AttributeSchema& schema);

}  // namespace catclass
