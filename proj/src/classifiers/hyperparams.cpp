#include "catclass/classifiers/hyperparams.hpp"

#include <cmath>
#include <sstream>

#include "catclass/error.hpp"

namespace catclass {

std::string_view algorithm_id(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::knn:
      return "knn";
    case Algorithm::naive_bayes:
      return "naive-bayes";
    case Algorithm::tree:
      return "tree";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view id) noexcept {
  if (id == "knn") return Algorithm::knn;
  if (id == "naive-bayes") return Algorithm::naive_bayes;
  if (id == "tree") return Algorithm::tree;
  return std::nullopt;
}

void Hyperparams::validate() const {
  if (knn_k < 1) throw InvalidArgument("knn k must be >= 1");
  if (!std::isfinite(nb_alpha) || nb_alpha < 0.0) {
    throw InvalidArgument("naive bayes alpha must be a finite value >= 0");
  }
  if (tree_min_samples < 2) throw InvalidArgument("tree min-samples must be >= 2");
  if (tree_max_depth && *tree_max_depth < 1) throw InvalidArgument("tree max-depth must be >= 1");
}

std::string Hyperparams::describe() const {
  std::ostringstream out;
  out << "knn_k=" << knn_k << " nb_alpha=" << nb_alpha << " tree_min_samples=" << tree_min_samples
      << " tree_max_depth=";
  if (tree_max_depth) {
    out << *tree_max_depth;
  } else {
    out << "unlimited";
  }
  return out.str();
}

}  // namespace catclass
