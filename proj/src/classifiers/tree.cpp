#include "catclass/classifiers/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "catclass/error.hpp"

namespace catclass {
namespace {

ClassIndex majority(const ClassDistribution& dist) {
  ClassIndex best = 0;
  for (ClassIndex c = 1; c < dist.size(); ++c) {
    if (dist[c] > dist[best]) best = c;
  }
  return best;
}

ClassDistribution tally(const Dataset& data, std::span<const std::size_t> rows) {
  ClassDistribution dist(data.schema().class_count());
  for (auto i : rows) ++dist.counts[*data[i].label];
  return dist;
}

bool is_pure(const ClassDistribution& dist) {
  return std::count_if(dist.counts.begin(), dist.counts.end(), [](auto n) { return n > 0; }) <= 1;
}

class Inducer {
 public:
  Inducer(const Dataset& data, const Hyperparams& params) : data_(data), params_(params) {}

  std::vector<TreeNode> run() {
    std::vector<std::size_t> rows(data_.size());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::vector<bool> used(data_.schema().feature_count(), false);
    grow(rows, used, 0);
    return std::move(nodes_);
  }

 private:
  std::size_t leaf(ClassDistribution dist) {
    const auto label = majority(dist);
    nodes_.emplace_back(TreeLeaf{std::move(dist), label});
    return nodes_.size() - 1;
  }

  std::size_t grow(const std::vector<std::size_t>& rows, std::vector<bool>& used, std::size_t depth) {
    auto dist = tally(data_, rows);
    const bool exhausted = std::all_of(used.begin(), used.end(), [](bool u) { return u; });
    if (is_pure(dist) || exhausted || rows.size() < params_.tree_min_samples ||
        (params_.tree_max_depth && depth >= *params_.tree_max_depth)) {
      return leaf(std::move(dist));
    }

    std::optional<std::size_t> best;
    double best_gain = kGainEpsilon;
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (used[j]) continue;
      const double g = info_gain(data_, rows, j);
      if (g > best_gain + (best ? kGainEpsilon : 0.0)) {
        best = j;
        best_gain = g;
      }
    }
    if (!best) return leaf(std::move(dist));

    const auto& attr = data_.schema().feature(*best);
    std::vector<std::vector<std::size_t>> parts(attr.size());
    for (auto i : rows) parts[data_[i].values[*best]].push_back(i);

    const auto self = nodes_.size();
    nodes_.emplace_back(TreeSplit{*best, {}, dist});
    std::vector<std::size_t> children;
    children.reserve(parts.size());
    used[*best] = true;
    for (const auto& part : parts) {
      children.push_back(part.empty() ? leaf(dist) : grow(part, used, depth + 1));
    }
    used[*best] = false;
    std::get<TreeSplit>(nodes_[self]).children = std::move(children);
    return self;
  }

  const Dataset& data_;
  const Hyperparams& params_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

double entropy(const ClassDistribution& dist) {
  const auto n = dist.total();
  if (n == 0) throw InvalidArgument("entropy of an empty distribution");
  double h = 0.0;
  for (auto k : dist.counts) {
    if (k == 0) continue;
    const double p = static_cast<double>(k) / static_cast<double>(n);
    h -= p * std::log2(p);
  }
  return h;
}

double info_gain(const Dataset& data, std::span<const std::size_t> rows, std::size_t attribute) {
  if (attribute >= data.schema().feature_count()) throw InvalidArgument("attribute index out of range");
  if (rows.empty()) throw InvalidArgument("info_gain of an empty subset");
  if (!data.labeled()) throw InvalidArgument("info_gain needs labeled data");
  const auto& attr = data.schema().feature(attribute);
  std::vector<ClassDistribution> branches(attr.size(), ClassDistribution(data.schema().class_count()));
  for (auto i : rows) ++branches[data[i].values[attribute]].counts[*data[i].label];
  double remainder = 0.0;
  const auto n = static_cast<double>(rows.size());
  for (const auto& b : branches) {
    const auto nb = b.total();
    if (nb == 0) continue;
    remainder += static_cast<double>(nb) / n * entropy(b);
  }
  return entropy(tally(data, rows)) - remainder;
}

double info_gain(const Dataset& data, std::string_view attribute) {
  const auto j = data.schema().feature_index(normalize_label(attribute));
  if (!j) throw InvalidArgument("unknown attribute '" + std::string(attribute) + "'");
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return info_gain(data, rows, *j);
}

TreeModel::TreeModel(std::shared_ptr<const AttributeSchema> schema, std::vector<TreeNode> nodes)
    : schema_(std::move(schema)), nodes_(std::move(nodes)) {
  if (!schema_) throw InvalidArgument("tree model requires a schema");
  if (nodes_.empty()) throw InvalidArgument("tree has no nodes");
  const auto& s = *schema_;

  // Each node must be reached exactly once; children always point forward.
  std::vector<int> reached(nodes_.size(), 0);
  reached[0] = 1;
  std::vector<std::vector<bool>> path_attrs(nodes_.size());
  path_attrs[0].assign(s.feature_count(), false);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (reached[i] != 1) throw InvalidArgument("tree node " + std::to_string(i) + " is unreachable or shared");
    if (const auto* leaf = std::get_if<TreeLeaf>(&nodes_[i])) {
      if (leaf->distribution.size() != s.class_count() || leaf->distribution.total() == 0) {
        throw InvalidArgument("tree leaf " + std::to_string(i) + " has a bad distribution");
      }
      if (leaf->label != majority(leaf->distribution)) {
        throw InvalidArgument("tree leaf " + std::to_string(i) + " label is not the majority class");
      }
      continue;
    }
    const auto& split = std::get<TreeSplit>(nodes_[i]);
    if (split.attribute >= s.feature_count()) throw InvalidArgument("tree split on unknown attribute");
    if (path_attrs[i][split.attribute]) {
      throw InvalidArgument("attribute '" + s.feature(split.attribute).name + "' repeats on a tree path");
    }
    if (split.children.size() != s.feature(split.attribute).size()) {
      throw InvalidArgument("tree split " + std::to_string(i) + " needs one child per value");
    }
    if (split.distribution.size() != s.class_count()) throw InvalidArgument("tree split distribution has wrong length");
    for (auto child : split.children) {
      if (child <= i || child >= nodes_.size()) throw InvalidArgument("tree child index out of order");
      ++reached[child];
      path_attrs[child] = path_attrs[i];
      path_attrs[child][split.attribute] = true;
    }
  }
}

TreeModel TreeModel::induce(const Dataset& data, const Hyperparams& params) {
  params.validate();
  if (data.empty()) throw InvalidArgument("tree: empty training set");
  if (!data.labeled()) throw InvalidArgument("tree: training data must be labeled");
  return TreeModel(data.schema_ptr(), Inducer(data, params).run());
}

std::vector<double> TreeModel::predict_proba(const Record& x) const {
  check_record(*schema_, x);
  std::size_t at = 0;
  while (const auto* split = std::get_if<TreeSplit>(&nodes_[at])) {
    at = split->children[x.values[split->attribute]];
  }
  return std::get<TreeLeaf>(nodes_[at]).distribution.normalized();
}

std::optional<std::size_t> TreeModel::root_attribute() const {
  if (const auto* split = std::get_if<TreeSplit>(&nodes_.front())) return split->attribute;
  return std::nullopt;
}

std::size_t TreeModel::depth() const {
  std::vector<std::size_t> level(nodes_.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, level[i]);
    if (const auto* split = std::get_if<TreeSplit>(&nodes_[i])) {
      for (auto c : split->children) level[c] = level[i] + 1;
    }
  }
  return deepest;
}

std::size_t TreeModel::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const auto& n) { return std::holds_alternative<TreeLeaf>(n); }));
}

std::string render_tree(const TreeModel& tree) {
  const auto& s = tree.schema();
  std::ostringstream out;
  auto counts = [](const ClassDistribution& d) {
    std::string text = "(";
    for (std::size_t c = 0; c < d.size(); ++c) text += (c ? "/" : "") + std::to_string(d[c]);
    return text + ")";
  };
  auto walk = [&](auto&& self, std::size_t node, std::size_t indent) -> void {
    const auto pad = std::string(indent * 2, ' ');
    if (const auto* leaf = std::get_if<TreeLeaf>(&tree.nodes()[node])) {
      out << pad << "-> " << s.class_label(leaf->label) << ' ' << counts(leaf->distribution) << '\n';
      return;
    }
    const auto& split = std::get<TreeSplit>(tree.nodes()[node]);
    const auto& attr = s.feature(split.attribute);
    for (std::size_t v = 0; v < split.children.size(); ++v) {
      out << pad << attr.name << " = " << attr.domain[v] << '\n';
      self(self, split.children[v], indent + 1);
    }
  };
  walk(walk, 0, 0);
  return out.str();
}

}  // namespace catclass
