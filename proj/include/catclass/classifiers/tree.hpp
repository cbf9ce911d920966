#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "catclass/classifiers/hyperparams.hpp"
#include "catclass/dataset/dataset.hpp"

namespace catclass {

/// Gains at or below this are treated as no gain, absorbing rounding noise in
/// the entropy subtraction. The same margin decides ties between attributes.
inline constexpr double kGainEpsilon = 1e-12;

/// Shannon entropy in bits. Throws InvalidArgument for a zero-sum input.
double entropy(const ClassDistribution& dist);

/// Information gain of splitting `rows` of `data` on feature `attribute`.
/// Empty branches contribute nothing.
double info_gain(const Dataset& data, std::span<const std::size_t> rows, std::size_t attribute);

/// Gain over the whole dataset, attribute addressed by name.
double info_gain(const Dataset& data, std::string_view attribute);

struct TreeSplit {
  std::size_t attribute;
  /// Node indices, one per domain value in domain order.
  std::vector<std::size_t> children;
  ClassDistribution distribution;

  friend bool operator==(const TreeSplit&, const TreeSplit&) = default;
};

struct TreeLeaf {
  ClassDistribution distribution;
  ClassIndex label;

  friend bool operator==(const TreeLeaf&, const TreeLeaf&) = default;
};

using TreeNode = std::variant<TreeSplit, TreeLeaf>;

/// Multiway classification tree stored as a flat node list, root first.
class TreeModel {
 public:
  /// Checks structure: valid child indices, one child per domain value, no
  /// attribute repeated on a root-to-leaf path, leaf labels equal the argmax.
  TreeModel(std::shared_ptr<const AttributeSchema> schema, std::vector<TreeNode> nodes);

  /// Greedy top-down induction on information gain.
  static TreeModel induce(const Dataset& data, const Hyperparams& params);

  std::vector<double> predict_proba(const Record& x) const;

  const AttributeSchema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const AttributeSchema>& schema_ptr() const noexcept { return schema_; }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }

  /// Feature index tested at the root, or nothing for a single leaf.
  std::optional<std::size_t> root_attribute() const;
  std::size_t depth() const;
  std::size_t leaf_count() const;

 private:
  std::shared_ptr<const AttributeSchema> schema_;
  std::vector<TreeNode> nodes_;
};

/// Indented text rendering, one line per node.
std::string render_tree(const TreeModel& tree);

}  // namespace catclass
