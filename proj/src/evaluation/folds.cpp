#include "catclass/evaluation/folds.hpp"

#include <random>
#include <utility>

#include "catclass/error.hpp"

namespace catclass {
namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

std::vector<std::size_t> FoldAssignment::members(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == f) out.push_back(i);
  }
  return out;
}

FoldAssignment stratified_folds(const Dataset& data, std::size_t folds, std::uint64_t seed) {
  if (!data.labeled()) throw InvalidArgument("stratified folds need labeled data");
  if (folds < 2 || folds > data.size()) {
    throw InvalidArgument("fold count " + std::to_string(folds) + " outside [2, " +
                          std::to_string(data.size()) + "]");
  }
  const auto classes = data.schema().class_count();
  std::vector<std::vector<std::size_t>> by_class(classes);
  for (std::size_t i = 0; i < data.size(); ++i) by_class[*data[i].label].push_back(i);

  std::mt19937_64 rng(seed);
  FoldAssignment out{std::vector<std::size_t>(data.size(), 0), folds, seed};
  std::size_t next = 0;
  for (auto& members : by_class) {
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[bounded(rng, i)]);
    }
    for (auto idx : members) {
      out.fold_of[idx] = next;
      next = (next + 1) % folds;
    }
  }
  return out;
}

std::string Protocol::describe(std::size_t records) const {
  if (kind == Kind::test_on_train) return "test-on-train";
  if (folds == records) return "leave-one-out";
  auto text = "stratified " + std::to_string(folds) + "-fold cv";
  if (seed) text += ", seed " + std::to_string(*seed);
  return text;
}

}  // namespace catclass
