#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "catclass/classifiers/hyperparams.hpp"
#include "catclass/classifiers/knn.hpp"
#include "catclass/classifiers/naive_bayes.hpp"
#include "catclass/classifiers/tree.hpp"

namespace catclass {

using ModelPayload = std::variant<KnnModel, NaiveBayesModel, TreeModel>;

/// Any of the three classifiers plus the hyperparameters that produced it.
/// Immutable; prediction is safe from concurrent threads.
class TrainedModel {
 public:
  TrainedModel(Hyperparams params, ModelPayload payload);

  /// Validates `params`, then trains the requested algorithm on labeled data.
  static TrainedModel train(Algorithm algo, const Dataset& data, const Hyperparams& params);

  Algorithm algorithm() const noexcept;
  const Hyperparams& params() const noexcept { return params_; }
  const ModelPayload& payload() const noexcept { return payload_; }
  const AttributeSchema& schema() const noexcept;
  std::shared_ptr<const AttributeSchema> schema_ptr() const noexcept;
  const std::string& schema_fingerprint() const noexcept { return schema().fingerprint(); }

  /// Class probabilities for one record of this model's schema.
  std::vector<double> predict_proba(const Record& x) const;

  /// One probability vector per record. Throws ModelError when the dataset's
  /// schema fingerprint differs from the model's.
  std::vector<std::vector<double>> predict_proba(const Dataset& data) const;

 private:
  Hyperparams params_;
  ModelPayload payload_;
};

inline constexpr int kModelFormatVersion = 1;

/// Writes the model as an indented JSON document:
///
///   { "format": "catclass-model", "version": 1, "algorithm": "<id>",
///     "hyperparams": { "knn_k", "nb_alpha", "tree_min_samples", "tree_max_depth" },
///     "schema_fingerprint": "<16 hex digits>",
///     "schema": <schema document>,
///     "payload": ... }
///
/// Payloads: knn {"k", "records": [[v0, .., v8, label], ..]};
/// naive-bayes {"alpha", "class_counts", "tables": [[[count per class] per value] per attribute]};
/// tree {"nodes": [{"split": attr, "children": [..], "distribution": [..]} |
///                 {"leaf": label, "distribution": [..]}]}.
/// Doubles are written in shortest round-trip form, so a reload predicts
/// bit-identically.
void save_model(std::ostream& sink, const TrainedModel& model);

/// Throws ModelError on malformed documents, version mismatch, or a schema
/// whose digest differs from the stored fingerprint.
TrainedModel load_model(std::istream& source);

}  // namespace catclass
