#include <gtest/gtest.h>

#include <random>
#include <set>

#include "catclass/dataset/corpus.hpp"
#include "catclass/error.hpp"
#include "catclass/evaluation/cross_validate.hpp"
#include "catclass/evaluation/metrics.hpp"
#include "catclass/evaluation/report.hpp"
#include "oracles.hpp"

namespace catclass {
namespace {

// Pooled 10-fold matrices reported for the survey, rows actual, columns predicted.
const ConfusionMatrix kNaiveBayes = ConfusionMatrix::from_rows({{80, 2, 2}, {5, 4, 1}, {3, 1, 2}});
const ConfusionMatrix kTree = ConfusionMatrix::from_rows({{81, 1, 2}, {8, 2, 0}, {4, 2, 0}});
const ConfusionMatrix kKnn = ConfusionMatrix::from_rows({{81, 3, 0}, {6, 4, 0}, {4, 0, 2}});

TEST(ConfusionMatrix, MarginsAndValidation) {
  EXPECT_EQ(kKnn.total(), 100u);
  EXPECT_EQ(kKnn.trace(), 87u);
  EXPECT_EQ(kKnn.row_sum(1), 10u);
  EXPECT_EQ(kKnn.column_sum(0), 91u);
  EXPECT_EQ(kKnn.actual_counts(), ClassDistribution({84, 10, 6}));
  EXPECT_THROW(ConfusionMatrix::from_rows({}), InvalidArgument);
  EXPECT_THROW(ConfusionMatrix::from_rows({{1, 2}, {3}}), InvalidArgument);
  ConfusionMatrix m(2);
  EXPECT_THROW(m.add(2, 0), InvalidArgument);
  m.add(1, 0, 3);
  EXPECT_EQ(m.at(1, 0), 3u);
}

TEST(Metrics, ClassAccuracyOfReportedMatrices) {
  EXPECT_NEAR(class_accuracy(kKnn), 0.87, 1e-12);
  EXPECT_NEAR(class_accuracy(kNaiveBayes), 0.86, 1e-12);
  EXPECT_NEAR(class_accuracy(kTree), 0.83, 1e-12);
  EXPECT_THROW(class_accuracy(ConfusionMatrix(3)), InvalidArgument);
}

struct Row {
  double sens, spec, f1, prec, recall;
  bool f1_defined = true;
};

void expect_row(const PerClassMetrics& m, const Row& want) {
  EXPECT_NEAR(m.sensitivity.value, want.sens, 5e-5);
  EXPECT_NEAR(m.specificity.value, want.spec, 5e-5);
  EXPECT_NEAR(m.precision.value, want.prec, 5e-5);
  EXPECT_NEAR(m.recall.value, want.recall, 5e-5);
  EXPECT_EQ(m.f1.defined, want.f1_defined);
  if (want.f1_defined) EXPECT_NEAR(m.f1.value, want.f1, 5e-5);
}

TEST(Metrics, PerClassRowsOfReportedMatrices) {
  expect_row(per_class_metrics(kTree, 0), {.9643, .2500, .9153, .8710, .9643});
  expect_row(per_class_metrics(kTree, 1), {.2000, .9667, .2667, .4000, .2000});
  expect_row(per_class_metrics(kTree, 2), {.0000, .9787, 0, .0000, .0000, false});
  expect_row(per_class_metrics(kKnn, 0), {.9643, .3750, .9257, .8901, .9643});
  expect_row(per_class_metrics(kKnn, 1), {.4000, .9667, .4706, .5714, .4000});
  expect_row(per_class_metrics(kKnn, 2), {.3333, 1.0000, .5000, 1.0000, .3333});
  expect_row(per_class_metrics(kNaiveBayes, 0), {.9524, .5000, .9302, .9091, .9524});
  expect_row(per_class_metrics(kNaiveBayes, 1), {.4000, .9667, .4706, .5714, .4000});
  expect_row(per_class_metrics(kNaiveBayes, 2), {.3333, .9681, .3636, .4000, .3333});
}

TEST(Metrics, UndefinedRatiosAreFlagged) {
  // Class 1 is never predicted and never occurs.
  const auto m = per_class_metrics(ConfusionMatrix::from_rows({{5, 0}, {0, 0}}), 1);
  EXPECT_FALSE(m.sensitivity.defined);
  EXPECT_FALSE(m.precision.defined);
  EXPECT_FALSE(m.f1.defined);
  EXPECT_TRUE(m.specificity.defined);
  EXPECT_DOUBLE_EQ(m.specificity.value, 1.0);
  EXPECT_THROW(per_class_metrics(kKnn, 3), InvalidArgument);
}

ConfusionMatrix random_matrix(std::mt19937& rng, std::size_t classes) {
  std::uniform_int_distribution<std::size_t> cell(0, 9);
  ConfusionMatrix m(classes);
  for (ClassIndex a = 0; a < classes; ++a) {
    for (ClassIndex p = 0; p < classes; ++p) m.add(a, p, cell(rng));
  }
  if (m.total() == 0) m.add(0, 0);
  return m;
}

TEST(Metrics, PropertyCountsPartitionAndRecallEqualsSensitivity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = random_matrix(rng, 2 + trial % 4);
    std::size_t tp_sum = 0, predicted_sum = 0;
    for (ClassIndex c = 0; c < m.classes(); ++c) {
      const auto r = per_class_metrics(m, c);
      EXPECT_EQ(r.tp + r.fn + r.fp + r.tn, m.total());
      EXPECT_EQ(r.sensitivity.defined, r.recall.defined);
      EXPECT_EQ(r.sensitivity.value, r.recall.value);
      EXPECT_EQ(r.ca, class_accuracy(m));
      for (const auto& v : {r.sensitivity, r.specificity, r.precision, r.f1}) {
        EXPECT_GE(v.value, 0.0);
        EXPECT_LE(v.value, 1.0);
      }
      tp_sum += r.tp;
      predicted_sum += r.tp + r.fp;
    }
    // Micro-averaged precision equals CA.
    EXPECT_EQ(tp_sum, m.trace());
    EXPECT_EQ(predicted_sum, m.total());
  }
}

TEST(Metrics, PropertyClassRelabelingPermutesRows) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 2 + trial % 4;
    const auto m = random_matrix(rng, k);
    std::vector<ClassIndex> perm(k);
    std::iota(perm.begin(), perm.end(), ClassIndex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    ConfusionMatrix pm(k);
    for (ClassIndex a = 0; a < k; ++a) {
      for (ClassIndex p = 0; p < k; ++p) pm.add(perm[a], perm[p], m.at(a, p));
    }
    for (ClassIndex c = 0; c < k; ++c) {
      const auto x = per_class_metrics(m, c);
      const auto y = per_class_metrics(pm, perm[c]);
      EXPECT_EQ(std::tie(x.tp, x.fn, x.fp, x.tn), std::tie(y.tp, y.fn, y.fp, y.tn));
      EXPECT_DOUBLE_EQ(x.f1.value, y.f1.value);
      EXPECT_DOUBLE_EQ(x.ca, y.ca);
    }
  }
}

std::vector<std::size_t> per_fold_count(const Dataset& data, const FoldAssignment& a, ClassIndex c) {
  std::vector<std::size_t> counts(a.folds, 0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (*data[i].label == c) ++counts[a.fold_of[i]];
  }
  return counts;
}

TEST(StratifiedFolds, CorpusClassCountsPerFold) {
  const auto data = corpus::election_dataset();
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 987654321ull}) {
    const auto a = stratified_folds(data, 10, seed);
    for (auto n : per_fold_count(data, a, 0)) EXPECT_TRUE(n == 8 || n == 9);
    for (auto n : per_fold_count(data, a, 1)) EXPECT_EQ(n, 1u);
    for (auto n : per_fold_count(data, a, 2)) EXPECT_LE(n, 1u);
    for (std::size_t f = 0; f < 10; ++f) EXPECT_EQ(a.members(f).size(), 10u);
  }
}

TEST(StratifiedFolds, DeterministicPerSeed) {
  const auto data = corpus::election_dataset();
  EXPECT_EQ(stratified_folds(data, 10, 42).fold_of, stratified_folds(data, 10, 42).fold_of);
  EXPECT_NE(stratified_folds(data, 10, 42).fold_of, stratified_folds(data, 10, 43).fold_of);
}

TEST(StratifiedFolds, LeaveOneOut) {
  const auto data = corpus::election_dataset();
  const auto a = stratified_folds(data, data.size(), 0);
  std::set<std::size_t> seen(a.fold_of.begin(), a.fold_of.end());
  EXPECT_EQ(seen.size(), data.size());
}

TEST(StratifiedFolds, RangeErrors) {
  const auto data = corpus::election_dataset();
  EXPECT_THROW(stratified_folds(data, 1, 0), InvalidArgument);
  EXPECT_THROW(stratified_folds(data, 101, 0), InvalidArgument);
  EXPECT_THROW(stratified_folds(data.subset({}), 2, 0), InvalidArgument);
}

TEST(StratifiedFolds, PropertyBalancedAndPartitioning) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto data = oracle::random_binary_dataset(rng, 2 + trial % 40, 2, 2 + trial % 3);
    const std::size_t folds = 2 + trial % (data.size() - 1);
    const auto a = stratified_folds(data, folds, static_cast<std::uint64_t>(trial));
    ASSERT_EQ(a.fold_of.size(), data.size());
    std::size_t lo = data.size(), hi = 0, covered = 0;
    for (std::size_t f = 0; f < folds; ++f) {
      const auto m = a.members(f);
      lo = std::min(lo, m.size());
      hi = std::max(hi, m.size());
      covered += m.size();
    }
    EXPECT_EQ(covered, data.size());
    EXPECT_LE(hi - lo, 1u);
    for (ClassIndex c = 0; c < data.schema().class_count(); ++c) {
      const auto counts = per_fold_count(data, a, c);
      const auto [mn, mx] = std::minmax_element(counts.begin(), counts.end());
      EXPECT_LE(*mx - *mn, 1u);
    }
  }
}

TEST(Protocol, Describe) {
  EXPECT_EQ(Protocol::k_fold(10, 42).describe(100), "stratified 10-fold cv, seed 42");
  EXPECT_EQ(Protocol::k_fold(100, std::nullopt).describe(100), "leave-one-out");
  EXPECT_EQ(Protocol::test_on_train().describe(100), "test-on-train");
}

TEST(CrossValidate, EveryRecordPredictedOnce) {
  const auto data = corpus::election_dataset();
  for (auto algo : {Algorithm::knn, Algorithm::naive_bayes, Algorithm::tree}) {
    const auto r = cross_validate(data, algo, {}, Protocol::k_fold(10, 42));
    EXPECT_EQ(r.matrix.total(), data.size());
    EXPECT_EQ(r.matrix.actual_counts(), class_counts(data));
    ASSERT_EQ(r.proba.size(), data.size());
    ASSERT_EQ(r.predicted.size(), data.size());
    ASSERT_TRUE(r.folds);
  }
}

TEST(CrossValidate, DuplicatedDistinctRecordsWithOneNeighbourAreAllCorrect) {
  const auto schema = oracle::binary_schema(4, 3);
  std::mt19937 rng(12);
  std::vector<Record> rows;
  for (ValueIndex code = 0; code < 16; ++code) {
    Record r{{code & 1u, (code >> 1) & 1u, (code >> 2) & 1u, (code >> 3) & 1u},
             static_cast<ClassIndex>(rng() % 3)};
    rows.push_back(r);
    rows.push_back(r);
  }
  const Dataset data(schema, rows);
  Hyperparams params;
  params.knn_k = 1;
  const auto r = cross_validate(data, Algorithm::knn, params, Protocol::k_fold(data.size(), std::nullopt));
  EXPECT_EQ(r.matrix.trace(), data.size());
}

TEST(CrossValidate, ThreadCountDoesNotChangeResults) {
  const auto data = corpus::election_dataset();
  for (auto algo : {Algorithm::knn, Algorithm::naive_bayes, Algorithm::tree}) {
    const auto serial = cross_validate(data, algo, {}, Protocol::k_fold(10, 7), 1);
    for (unsigned t : {2u, 4u, 16u}) {
      const auto parallel = cross_validate(data, algo, {}, Protocol::k_fold(10, 7), t);
      EXPECT_EQ(parallel.matrix, serial.matrix);
      EXPECT_EQ(parallel.proba, serial.proba);
      EXPECT_EQ(parallel.predicted, serial.predicted);
    }
  }
}

TEST(CrossValidate, SeedRequiredUnlessLeaveOneOut) {
  const auto data = corpus::election_dataset();
  EXPECT_THROW(cross_validate(data, Algorithm::knn, {}, Protocol::k_fold(10, std::nullopt)), InvalidArgument);
  EXPECT_NO_THROW(cross_validate(data, Algorithm::naive_bayes, {}, Protocol::k_fold(100, std::nullopt)));
}

TEST(CrossValidate, TestOnTrainUsesTheFullModel) {
  const auto data = corpus::election_dataset();
  const auto r = cross_validate(data, Algorithm::tree, {}, Protocol::test_on_train());
  EXPECT_FALSE(r.folds);
  EXPECT_EQ(r.matrix.trace(), 97u);
}

TEST(Evaluate, ReportIsSelfConsistent) {
  const auto data = corpus::election_dataset();
  const auto rep = evaluate(data, Algorithm::naive_bayes, {}, Protocol::k_fold(10, 42));
  EXPECT_EQ(rep.protocol_text, "stratified 10-fold cv, seed 42");
  EXPECT_EQ(rep.class_labels.size(), 3u);
  EXPECT_DOUBLE_EQ(rep.majority_baseline, 0.84);
  ASSERT_EQ(rep.metrics.size(), 3u);
  for (ClassIndex c = 0; c < 3; ++c) EXPECT_EQ(rep.metrics[c].tp, rep.matrix.at(c, c));
  // Every class has positives and negatives, so all nine curves exist.
  ASSERT_EQ(rep.curves.size(), 9u);
  EXPECT_EQ(rep.curves[0].kind, CurveKind::roc);
  EXPECT_TRUE(rep.curves[0].auc);
  EXPECT_EQ(rep.curves[4].kind, CurveKind::lift);
  EXPECT_EQ(rep.curves[8].kind, CurveKind::calibration);
  EXPECT_EQ(rep.curves[8].positive_class, 2u);
}

}  // namespace
}  // namespace catclass
