#include <gtest/gtest.h>

#include <vector>

#include "catclass/classifiers/decision.hpp"
#include "catclass/classifiers/hyperparams.hpp"
#include "catclass/error.hpp"

namespace catclass {
namespace {

TEST(PredictLabel, ArgmaxWithEarliestTieBreak) {
  EXPECT_EQ(predict_label(std::vector<double>{0.2, 0.5, 0.3}), 1u);
  EXPECT_EQ(predict_label(std::vector<double>{0.4, 0.2, 0.4}), 0u);
  EXPECT_EQ(predict_label(std::vector<double>{0.0, 0.5, 0.5}), 1u);
  EXPECT_EQ(predict_label(std::vector<double>{1.0}), 0u);
}

TEST(PredictLabel, RejectsInvalidVectors) {
  EXPECT_THROW(predict_label(std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(predict_label(std::vector<double>{1.2, -0.2}), InvalidArgument);
  EXPECT_THROW(predict_label(std::vector<double>{0.5, 0.4}), InvalidArgument);
  EXPECT_NO_THROW(predict_label(std::vector<double>{0.5, 0.5 + 1e-10}));
}

TEST(Hyperparams, Validation) {
  Hyperparams p;
  EXPECT_NO_THROW(p.validate());
  p.knn_k = 0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.nb_alpha = -0.5;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.tree_min_samples = 1;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.tree_max_depth = 0;
  EXPECT_THROW(p.validate(), InvalidArgument);
}

TEST(Algorithm, IdsRoundTrip) {
  for (auto a : {Algorithm::knn, Algorithm::naive_bayes, Algorithm::tree}) EXPECT_EQ(parse_algorithm(algorithm_id(a)), a);
  EXPECT_EQ(algorithm_id(Algorithm::naive_bayes), "naive-bayes");
  EXPECT_FALSE(parse_algorithm("svm"));
}

}  // namespace
}  // namespace catclass
