#include "catclass/classifiers/model.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "catclass/error.hpp"

namespace catclass {

using nlohmann::ordered_json;

TrainedModel::TrainedModel(Hyperparams params, ModelPayload payload)
    : params_(std::move(params)), payload_(std::move(payload)) {
  params_.validate();
}

TrainedModel TrainedModel::train(Algorithm algo, const Dataset& data, const Hyperparams& params) {
  params.validate();
  if (!data.labeled() || data.empty()) throw InvalidArgument("training needs a nonempty labeled dataset");
  switch (algo) {
    case Algorithm::knn:
      return TrainedModel(params, KnnModel::train(data, params.knn_k));
    case Algorithm::naive_bayes:
      return TrainedModel(params, NaiveBayesModel::train(data, params.nb_alpha));
    case Algorithm::tree:
      return TrainedModel(params, TreeModel::induce(data, params));
  }
  throw InvalidArgument("unknown algorithm");
}

Algorithm TrainedModel::algorithm() const noexcept {
  switch (payload_.index()) {
    case 0:
      return Algorithm::knn;
    case 1:
      return Algorithm::naive_bayes;
    default:
      return Algorithm::tree;
  }
}

const AttributeSchema& TrainedModel::schema() const noexcept {
  return std::visit([](const auto& m) -> const AttributeSchema& { return m.schema(); }, payload_);
}

std::shared_ptr<const AttributeSchema> TrainedModel::schema_ptr() const noexcept {
  return std::visit([](const auto& m) { return m.schema_ptr(); }, payload_);
}

std::vector<double> TrainedModel::predict_proba(const Record& x) const {
  return std::visit([&x](const auto& m) { return m.predict_proba(x); }, payload_);
}

std::vector<std::vector<double>> TrainedModel::predict_proba(const Dataset& data) const {
  if (data.schema().fingerprint() != schema_fingerprint()) {
    throw ModelError("schema fingerprint mismatch: model " + schema_fingerprint() + ", data " +
                     data.schema().fingerprint());
  }
  std::vector<std::vector<double>> out;
  out.reserve(data.size());
  for (const auto& r : data.records()) out.push_back(predict_proba(r));
  return out;
}

namespace {

ordered_json schema_json(const AttributeSchema& schema) {
  std::ostringstream text;
  write_schema(text, schema);
  return ordered_json::parse(text.str());
}

ordered_json payload_json(const KnnModel& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : m.training()) {
    ordered_json row(r.values);
    row.push_back(*r.label);
    rows.push_back(std::move(row));
  }
  return {{"k", m.k()}, {"records", std::move(rows)}};
}

ordered_json payload_json(const NaiveBayesModel& m) {
  ordered_json tables = ordered_json::array();
  for (const auto& t : m.tables()) {
    ordered_json table = ordered_json::array();
    for (ValueIndex v = 0; v < t.values(); ++v) {
      ordered_json row = ordered_json::array();
      for (ClassIndex c = 0; c < t.classes(); ++c) row.push_back(t.at(v, c));
      table.push_back(std::move(row));
    }
    tables.push_back(std::move(table));
  }
  return {{"alpha", m.alpha()}, {"class_counts", m.class_counts().counts}, {"tables", std::move(tables)}};
}

ordered_json payload_json(const TreeModel& m) {
  ordered_json nodes = ordered_json::array();
  for (const auto& node : m.nodes()) {
    if (const auto* split = std::get_if<TreeSplit>(&node)) {
      nodes.push_back({{"split", split->attribute},
                       {"children", split->children},
                       {"distribution", split->distribution.counts}});
    } else {
      const auto& leaf = std::get<TreeLeaf>(node);
      nodes.push_back({{"leaf", leaf.label}, {"distribution", leaf.distribution.counts}});
    }
  }
  return {{"nodes", std::move(nodes)}};
}

Hyperparams params_from_json(const ordered_json& j) {
  Hyperparams p;
  p.knn_k = j.at("knn_k").get<std::size_t>();
  p.nb_alpha = j.at("nb_alpha").get<double>();
  p.tree_min_samples = j.at("tree_min_samples").get<std::size_t>();
  if (!j.at("tree_max_depth").is_null()) p.tree_max_depth = j.at("tree_max_depth").get<std::size_t>();
  return p;
}

ModelPayload payload_from_json(Algorithm algo, const ordered_json& j,
                               const std::shared_ptr<const AttributeSchema>& schema) {
  switch (algo) {
    case Algorithm::knn: {
      std::vector<Record> records;
      for (const auto& row : j.at("records")) {
        auto values = row.get<std::vector<ValueIndex>>();
        if (values.empty()) throw ModelError("knn record with no values");
        Record r;
        r.label = values.back();
        values.pop_back();
        r.values = std::move(values);
        records.push_back(std::move(r));
      }
      return KnnModel(schema, std::move(records), j.at("k").get<std::size_t>());
    }
    case Algorithm::naive_bayes: {
      std::vector<CountTable> tables;
      for (const auto& table : j.at("tables")) {
        const auto classes = table.empty() ? 0 : table.front().size();
        CountTable t(table.size(), classes);
        for (ValueIndex v = 0; v < table.size(); ++v) {
          if (table[v].size() != classes) throw ModelError("ragged naive bayes count table");
          for (ClassIndex c = 0; c < classes; ++c) t.at(v, c) = table[v][c].get<std::size_t>();
        }
        tables.push_back(std::move(t));
      }
      return NaiveBayesModel(schema, ClassDistribution(j.at("class_counts").get<std::vector<std::size_t>>()),
                             std::move(tables), j.at("alpha").get<double>());
    }
    case Algorithm::tree: {
      std::vector<TreeNode> nodes;
      for (const auto& n : j.at("nodes")) {
        ClassDistribution dist(n.at("distribution").get<std::vector<std::size_t>>());
        if (n.contains("split")) {
          nodes.emplace_back(TreeSplit{n.at("split").get<std::size_t>(),
                                       n.at("children").get<std::vector<std::size_t>>(), std::move(dist)});
        } else {
          nodes.emplace_back(TreeLeaf{std::move(dist), n.at("leaf").get<ClassIndex>()});
        }
      }
      return TreeModel(schema, std::move(nodes));
    }
  }
  throw ModelError("unknown algorithm");
}

}  // namespace

void save_model(std::ostream& sink, const TrainedModel& model) {
  const auto& p = model.params();
  ordered_json doc;
  doc["format"] = "catclass-model";
  doc["version"] = kModelFormatVersion;
  doc["algorithm"] = std::string(algorithm_id(model.algorithm()));
  doc["hyperparams"] = {{"knn_k", p.knn_k},
                        {"nb_alpha", p.nb_alpha},
                        {"tree_min_samples", p.tree_min_samples},
                        {"tree_max_depth", p.tree_max_depth ? ordered_json(*p.tree_max_depth) : ordered_json()}};
  doc["schema_fingerprint"] = model.schema_fingerprint();
  doc["schema"] = schema_json(model.schema());
  doc["payload"] = std::visit([](const auto& m) { return payload_json(m); }, model.payload());
  sink << doc.dump(1, '\t') << '\n';
}

TrainedModel load_model(std::istream& source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(source);
  } catch (const ordered_json::parse_error& e) {
    throw ModelError(std::string("malformed model document: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != "catclass-model") {
      throw ModelError("malformed model document: missing catclass-model format tag");
    }
    const auto version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw ModelError("model format version " + std::to_string(version) + " is not supported (expected " +
                       std::to_string(kModelFormatVersion) + ")");
    }
    const auto algo = parse_algorithm(doc.at("algorithm").get<std::string>());
    if (!algo) throw ModelError("unknown algorithm " + doc.at("algorithm").dump());

    auto schema = std::make_shared<const AttributeSchema>(parse_schema(doc.at("schema").dump()));
    const auto stored = doc.at("schema_fingerprint").get<std::string>();
    if (stored != schema->fingerprint()) {
      throw ModelError("schema fingerprint mismatch: file says " + stored + ", embedded schema hashes to " +
                       schema->fingerprint());
    }
    auto params = params_from_json(doc.at("hyperparams"));
    return TrainedModel(params, payload_from_json(*algo, doc.at("payload"), schema));
  } catch (const ordered_json::exception& e) {
    throw ModelError(std::string("malformed model document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ModelError(std::string("inconsistent model document: ") + e.what());
  } catch (const SchemaError& e) {
    throw ModelError(std::string("model schema: ") + e.what());
  }
}

}  // namespace catclass
