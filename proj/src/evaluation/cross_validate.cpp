#include "catclass/evaluation/cross_validate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "catclass/classifiers/decision.hpp"
#include "catclass/error.hpp"

namespace catclass {

CrossValidationResult cross_validate(const Dataset& data, Algorithm algo, const Hyperparams& params,
                                     const Protocol& protocol, unsigned threads) {
  params.validate();
  if (!data.labeled() || data.empty()) throw InvalidArgument("cross validation needs nonempty labeled data");

  const auto n = data.size();
  CrossValidationResult out{ConfusionMatrix(data.schema().class_count()),
                            std::vector<std::vector<double>>(n), std::vector<ClassIndex>(n, 0),
                            std::nullopt};

  if (protocol.kind == Protocol::Kind::test_on_train) {
    const auto model = TrainedModel::train(algo, data, params);
    for (std::size_t i = 0; i < n; ++i) out.proba[i] = model.predict_proba(data[i]);
  } else {
    if (!protocol.seed && protocol.folds != n) {
      throw InvalidArgument("k-fold cross validation requires an explicit seed");
    }
    out.folds = stratified_folds(data, protocol.folds, protocol.seed.value_or(0));
    const auto& assignment = *out.folds;

    std::vector<std::vector<std::size_t>> test(assignment.folds), train(assignment.folds);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t f = 0; f < assignment.folds; ++f) {
        (assignment.fold_of[i] == f ? test[f] : train[f]).push_back(i);
      }
    }

    std::vector<std::exception_ptr> errors(assignment.folds);
    auto run_fold = [&](std::size_t f) {
      try {
        const auto model = TrainedModel::train(algo, data.subset(train[f]), params);
        for (auto i : test[f]) out.proba[i] = model.predict_proba(data[i]);
      } catch (...) {
        errors[f] = std::current_exception();
      }
    };

    const auto workers = std::clamp<std::size_t>(threads, 1, assignment.folds);
    if (workers == 1) {
      for (std::size_t f = 0; f < assignment.folds; ++f) run_fold(f);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (auto f = next++; f < assignment.folds; f = next++) run_fold(f);
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    out.predicted[i] = predict_label(out.proba[i]);
    out.matrix.add(*data[i].label, out.predicted[i]);
  }
  return out;
}

}  // namespace catclass
