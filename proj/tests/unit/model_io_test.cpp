#include <gtest/gtest.h>

#include <sstream>

#include "catclass/classifiers/model.hpp"
#include "catclass/dataset/corpus.hpp"
#include "catclass/error.hpp"
#include "oracles.hpp"

namespace catclass {
namespace {

std::string saved(const TrainedModel& m) {
  std::ostringstream out;
  save_model(out, m);
  return out.str();
}

TrainedModel reload(const std::string& text) {
  std::istringstream in(text);
  return load_model(in);
}

class ModelRoundTrip : public ::testing::TestWithParam<Algorithm> {};

TEST_P(ModelRoundTrip, PredictsIdenticallyAfterReload) {
  const auto data = corpus::election_dataset();
  Hyperparams params;
  params.knn_k = 3;
  params.nb_alpha = 0.5;
  params.tree_max_depth = 4;
  const auto model = TrainedModel::train(GetParam(), data, params);
  const auto text = saved(model);
  const auto back = reload(text);
  EXPECT_EQ(back.algorithm(), GetParam());
  EXPECT_EQ(back.params(), params);
  EXPECT_EQ(back.schema_fingerprint(), model.schema_fingerprint());
  EXPECT_EQ(back.predict_proba(data), model.predict_proba(data));
  EXPECT_EQ(saved(back), text);
}

INSTANTIATE_TEST_SUITE_P(AllAlgorithms, ModelRoundTrip,
                         ::testing::Values(Algorithm::knn, Algorithm::naive_bayes, Algorithm::tree),
                         [](const auto& info) {
                           return info.param == Algorithm::naive_bayes ? std::string("naive_bayes")
                                                                       : std::string(algorithm_id(info.param));
                         });

TEST(ModelIo, TruncatedDocumentIsAModelError) {
  const auto text = saved(TrainedModel::train(Algorithm::tree, corpus::election_dataset(), {}));
  EXPECT_THROW(reload(text.substr(0, text.size() / 2)), ModelError);
  EXPECT_THROW(reload(""), ModelError);
  EXPECT_THROW(reload("[1, 2, 3]"), ModelError);
}

TEST(ModelIo, VersionMismatch) {
  auto text = saved(TrainedModel::train(Algorithm::knn, corpus::election_dataset(), {}));
  const auto at = text.find("\"version\": 1");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 12, "\"version\": 2");
  EXPECT_THROW(reload(text), ModelError);
}

TEST(ModelIo, FingerprintMismatch) {
  const auto model = TrainedModel::train(Algorithm::naive_bayes, corpus::election_dataset(), {});
  auto text = saved(model);
  const auto at = text.find(model.schema_fingerprint());
  ASSERT_NE(at, std::string::npos);
  text[at] = text[at] == '0' ? '1' : '0';
  EXPECT_THROW(reload(text), ModelError);
}

TEST(ModelIo, CorruptPayloadIsAModelError) {
  auto text = saved(TrainedModel::train(Algorithm::naive_bayes, corpus::election_dataset(), {}));
  const auto at = text.find("\"alpha\": 1");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 10, "\"alpha\": -1");
  EXPECT_THROW(reload(text), ModelError);
}

TEST(TrainedModel, RejectsDatasetFromAnotherSchema) {
  const auto model = TrainedModel::train(Algorithm::knn, corpus::election_dataset(), {});
  std::mt19937 rng(1);
  const auto other = oracle::random_binary_dataset(rng, 4, 9, 3);
  EXPECT_THROW(model.predict_proba(other), ModelError);
}

TEST(TrainedModel, TrainRejectsBadParamsAndUnlabeledData) {
  const auto data = corpus::election_dataset();
  Hyperparams bad;
  bad.knn_k = 0;
  EXPECT_THROW(TrainedModel::train(Algorithm::knn, data, bad), InvalidArgument);
  Dataset unlabeled(data.schema_ptr(), {Record{data[0].values, std::nullopt}});
  EXPECT_THROW(TrainedModel::train(Algorithm::tree, unlabeled, {}), InvalidArgument);
}

}  // namespace
}  // namespace catclass
