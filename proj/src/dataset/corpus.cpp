#include "catclass/dataset/corpus.hpp"

#include <sstream>
#include <string>

namespace catclass::corpus {
namespace detail {
extern const std::string_view kSchemaText;
extern const std::string_view kCsvText;
}  // namespace detail

std::string_view election_schema_text() { return detail::kSchemaText; }
std::string_view election_csv_text() { return detail::kCsvText; }

std::shared_ptr<const AttributeSchema> election_schema() {
  static const auto schema = std::make_shared<const AttributeSchema>(parse_schema(detail::kSchemaText));
  return schema;
}

Dataset election_dataset() {
  std::istringstream in{std::string(detail::kCsvText)};
  return parse_csv(in, election_schema(), LabelMode::labeled);
}

}  // namespace catclass::corpus
