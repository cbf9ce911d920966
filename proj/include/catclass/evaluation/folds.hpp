#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catclass/dataset/dataset.hpp"

namespace catclass {

struct FoldAssignment {
  std::vector<std::size_t> fold_of;  // per record
  std::size_t folds = 0;
  std::uint64_t seed = 0;

  /// Record indices assigned to fold `f`, ascending.
  std::vector<std::size_t> members(std::size_t f) const;
};

/// Stratified assignment. Within each class (in class order) the record
/// indices are shuffled by a seeded Fisher-Yates pass over mt19937_64 and
/// dealt round-robin; the dealing position carries over from one class to the
/// next, so overall fold sizes also differ by at most one and folds == N
/// yields leave-one-out. Bounded draws use rejection sampling rather than
/// std::uniform_int_distribution so the result is identical on every
/// standard library.
///
/// Throws InvalidArgument unless the data is labeled and 2 <= folds <= N.
FoldAssignment stratified_folds(const Dataset& data, std::size_t folds, std::uint64_t seed);

/// How held-out predictions are produced.
struct Protocol {
  enum class Kind { k_fold, test_on_train };

  Kind kind = Kind::k_fold;
  std::size_t folds = 10;
  std::optional<std::uint64_t> seed;

  static Protocol k_fold(std::size_t folds, std::optional<std::uint64_t> seed) {
    return {Kind::k_fold, folds, seed};
  }
  static Protocol test_on_train() { return {Kind::test_on_train, 1, std::nullopt}; }

  /// "stratified 10-fold cv, seed 42" / "leave-one-out" / "test-on-train".
  std::string describe(std::size_t records) const;
};

}  // namespace catclass
