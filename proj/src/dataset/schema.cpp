#include "catclass/dataset/schema.hpp"

#include <cctype>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "catclass/error.hpp"

namespace catclass {
namespace {

void validate_attribute(const Attribute& attr) {
  if (attr.name.empty()) throw SchemaError("attribute with empty name");
  if (attr.domain.size() < 2) {
    throw SchemaError("attribute '" + attr.name + "' needs at least 2 values, has " +
                      std::to_string(attr.domain.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& label : attr.domain) {
    if (label.empty()) throw SchemaError("attribute '" + attr.name + "' has an empty value label");
    if (!seen.insert(label).second) {
      throw SchemaError("attribute '" + attr.name + "' lists value '" + label + "' twice");
    }
  }
}

void fnv1a(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // Field separator so ("ab","c") and ("a","bc") differ.
  h ^= 0x1f;
  h *= 0x100000001b3ULL;
}

std::string compute_fingerprint(const std::vector<Attribute>& features, const Attribute& target) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const Attribute& a) {
    fnv1a(h, a.name);
    fnv1a(h, std::to_string(a.domain.size()));
    for (const auto& v : a.domain) fnv1a(h, v);
  };
  for (const auto& f : features) mix(f);
  fnv1a(h, "<target>");
  mix(target);
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace

std::optional<ValueIndex> Attribute::find(std::string_view label) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == label) return static_cast<ValueIndex>(i);
  }
  return std::nullopt;
}

std::string normalize_label(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ch);
  }
  return out;
}

AttributeSchema::AttributeSchema(std::vector<Attribute> features, Attribute target)
    : features_(std::move(features)), target_(std::move(target)) {
  if (features_.empty()) throw SchemaError("schema has no feature attributes");
  std::set<std::string_view> names;
  for (const auto& f : features_) {
    validate_attribute(f);
    if (!names.insert(f.name).second) {
      throw SchemaError("attribute '" + f.name + "' is listed twice");
    }
  }
  validate_attribute(target_);
  if (names.count(target_.name) != 0) {
    throw SchemaError("target '" + target_.name + "' is also listed as a feature");
  }
  fingerprint_ = compute_fingerprint(features_, target_);
}

std::optional<std::size_t> AttributeSchema::feature_index(std::string_view name) const {
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (features_[i].name == name) return i;
  }
  return std::nullopt;
}

AttributeSchema parse_schema(std::istream& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("schema is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw SchemaError("schema document must be a JSON object");
    if (doc.contains("format") && doc.at("format") != "catclass-schema") {
      throw SchemaError("unexpected schema format tag " + doc.at("format").dump());
    }
    if (doc.contains("version") && doc.at("version") != 1) {
      throw SchemaError("unsupported schema version " + doc.at("version").dump());
    }
    if (!doc.contains("attributes") || !doc.at("attributes").is_array()) {
      throw SchemaError("schema needs an 'attributes' array");
    }
    std::vector<Attribute> features;
    std::optional<Attribute> target;
    for (const auto& entry : doc.at("attributes")) {
      Attribute attr;
      attr.name = normalize_label(entry.at("name").get<std::string>());
      for (const auto& v : entry.at("values")) {
        attr.domain.push_back(normalize_label(v.get<std::string>()));
      }
      if (entry.value("target", false)) {
        if (target) throw SchemaError("more than one attribute is marked as target");
        target = std::move(attr);
      } else {
        features.push_back(std::move(attr));
      }
    }
    if (!target) throw SchemaError("schema has no attribute marked \"target\": true");
    return AttributeSchema(std::move(features), std::move(*target));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed schema entry: ") + e.what());
  }
}

AttributeSchema parse_schema(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_schema(in);
}

void write_schema(std::ostream& sink, const AttributeSchema& schema) {
  nlohmann::ordered_json doc;
  doc["format"] = "catclass-schema";
  doc["version"] = 1;
  auto& attrs = doc["attributes"] = nlohmann::ordered_json::array();
  for (const auto& f : schema.features()) {
    attrs.push_back({{"name", f.name}, {"values", f.domain}});
  }
  attrs.push_back({{"name", schema.target().name}, {"values", schema.target().domain}, {"target", true}});
  sink << doc.dump(2) << '\n';
}

}  // namespace catclass
