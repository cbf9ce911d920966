#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace catclass {

enum class Algorithm { knn, naive_bayes, tree };

/// CLI / file identifiers: "knn", "naive-bayes", "tree".
std::string_view algorithm_id(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view id) noexcept;

struct Hyperparams {
  std::size_t knn_k = 5;
  double nb_alpha = 1.0;
  std::size_t tree_min_samples = 2;
  std::optional<std::size_t> tree_max_depth;

  /// Throws InvalidArgument unless k >= 1, alpha >= 0 (finite), min_samples >= 2
  /// and max_depth (when set) >= 1.
  void validate() const;

  /// One-line "knn_k=5 nb_alpha=1 ..." rendering for reports.
  std::string describe() const;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

}  // namespace catclass
