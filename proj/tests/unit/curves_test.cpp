#include <gtest/gtest.h>

#include <random>

#include "catclass/error.hpp"
#include "catclass/evaluation/curves.hpp"
#include "oracles.hpp"

namespace catclass {
namespace {

using Points = std::vector<CurvePoint>;

TEST(Roc, SmallExample) {
  const std::vector<ScoredRecord> s{{0.9, true}, {0.8, false}, {0.7, true}, {0.1, false}};
  const auto roc = roc_points(s);
  EXPECT_EQ(roc.points, (Points{{0, 0}, {0, 0.5}, {0.5, 0.5}, {0.5, 1}, {1, 1}}));
  EXPECT_DOUBLE_EQ(*roc.auc, 0.75);
}

TEST(Roc, HalfAuc) {
  const std::vector<ScoredRecord> s{{0.9, true}, {0.8, false}, {0.7, true}};
  const auto roc = roc_points(s);
  EXPECT_EQ(roc.points, (Points{{0, 0}, {0, 0.5}, {1, 0.5}, {1, 1}}));
  EXPECT_DOUBLE_EQ(*roc.auc, 0.5);
}

TEST(Roc, TiedScoresMoveTogether) {
  const std::vector<ScoredRecord> s{{0.5, true}, {0.5, false}, {0.5, true}, {0.5, false}};
  const auto roc = roc_points(s);
  EXPECT_EQ(roc.points, (Points{{0, 0}, {1, 1}}));
  EXPECT_DOUBLE_EQ(*roc.auc, 0.5);
}

TEST(Roc, NeedsBothClasses) {
  const std::vector<ScoredRecord> s{{0.5, true}, {0.2, true}};
  EXPECT_THROW(roc_points(s), InvalidArgument);
  EXPECT_THROW(roc_points(std::vector<ScoredRecord>{}), InvalidArgument);
}

TEST(Roc, PropertyAucEqualsMannWhitneyAndStaysInUnitSquare) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> grid(0, 4);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + trial % 11;
    std::vector<ScoredRecord> s;
    std::vector<std::pair<double, bool>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      const double score = grid(rng) / 4.0;
      const bool pos = i == 0 ? true : (i == 1 ? false : (rng() & 1u) != 0);
      s.push_back({score, pos});
      pairs.emplace_back(score, pos);
    }
    std::shuffle(s.begin(), s.end(), rng);
    const auto roc = roc_points(s);
    ASSERT_NEAR(*roc.auc, oracle::mann_whitney(pairs), 1e-12) << "trial " << trial;
    EXPECT_EQ(roc.points.front(), (CurvePoint{0, 0}));
    EXPECT_EQ(roc.points.back(), (CurvePoint{1, 1}));
    for (std::size_t i = 1; i < roc.points.size(); ++i) {
      EXPECT_GE(roc.points[i].x, roc.points[i - 1].x);
      EXPECT_GE(roc.points[i].y, roc.points[i - 1].y);
    }
  }
}

TEST(Lift, SmallExample) {
  // Prevalence 1/2; ranking puts a positive, a negative, then the other positive.
  const std::vector<ScoredRecord> s{{0.9, true}, {0.8, false}, {0.7, true}, {0.1, false}};
  const auto lift = lift_points(s);
  ASSERT_EQ(lift.points.size(), 4u);
  EXPECT_DOUBLE_EQ(lift.points[0].y, 2.0);
  EXPECT_DOUBLE_EQ(lift.points[1].y, 1.0);
  EXPECT_DOUBLE_EQ(lift.points[2].y, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(lift.points[3].y, 1.0);
  EXPECT_DOUBLE_EQ(lift.points[0].x, 0.25);
  EXPECT_DOUBLE_EQ(lift.points[3].x, 1.0);
}

TEST(Lift, TiesKeepInputOrder) {
  const std::vector<ScoredRecord> s{{0.5, false}, {0.5, true}};
  const auto lift = lift_points(s);
  EXPECT_DOUBLE_EQ(lift.points[0].y, 0.0);
  EXPECT_DOUBLE_EQ(lift.points[1].y, 1.0);
  EXPECT_THROW(lift_points(std::vector<ScoredRecord>{{0.5, false}}), InvalidArgument);
}

TEST(Lift, PropertyEndsAtOneAndBoundedByInversePrevalence) {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<ScoredRecord> s{{u(rng), true}};
    for (int i = 0; i < trial % 20; ++i) s.push_back({u(rng), (rng() & 1u) != 0});
    const double positives = static_cast<double>(std::count_if(s.begin(), s.end(), [](auto r) { return r.positive; }));
    const auto lift = lift_points(s);
    EXPECT_NEAR(lift.points.back().y, 1.0, 1e-12);
    for (const auto& p : lift.points) EXPECT_LE(p.y, static_cast<double>(s.size()) / positives + 1e-12);
  }
}

TEST(Calibration, SmallExample) {
  const std::vector<ScoredRecord> s{{0.0, false}, {0.1, false}, {0.92, true}, {0.98, false}};
  const auto cal = calibration_points(s, 10);
  ASSERT_EQ(cal.points.size(), 2u);
  EXPECT_DOUBLE_EQ(cal.points[0].x, 0.05);
  EXPECT_DOUBLE_EQ(cal.points[0].y, 0.0);
  EXPECT_DOUBLE_EQ(cal.points[1].x, 0.95);
  EXPECT_DOUBLE_EQ(cal.points[1].y, 0.5);
}

TEST(Calibration, BinBoundariesCloseOnTheRight) {
  const auto edge = calibration_points(std::vector<ScoredRecord>{{0.9, true}, {1.0, false}}, 10);
  EXPECT_EQ(edge.points, (Points{{0.9, 1.0}, {1.0, 0.0}}));
  const std::vector<ScoredRecord> s{{0.5, true}, {0.5000001, false}};
  const auto cal = calibration_points(s, 2);
  ASSERT_EQ(cal.points.size(), 2u);
  EXPECT_DOUBLE_EQ(cal.points[0].y, 1.0);
  EXPECT_DOUBLE_EQ(cal.points[1].y, 0.0);
}

TEST(Calibration, RejectsBadInput) {
  EXPECT_THROW(calibration_points(std::vector<ScoredRecord>{}, 10), InvalidArgument);
  EXPECT_THROW(calibration_points(std::vector<ScoredRecord>{{0.5, true}}, 1), InvalidArgument);
  EXPECT_THROW(calibration_points(std::vector<ScoredRecord>{{1.5, true}}, 10), InvalidArgument);
}

TEST(Calibration, PropertyPointsInUnitSquareAndCountsPreserved) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<ScoredRecord> s;
    for (int i = 0; i <= trial % 30; ++i) s.push_back({u(rng), (rng() & 1u) != 0});
    const std::size_t bins = 2 + trial % 12;
    const auto cal = calibration_points(s, bins);
    EXPECT_LE(cal.points.size(), bins);
    for (std::size_t i = 0; i < cal.points.size(); ++i) {
      EXPECT_GE(cal.points[i].x, 0.0);
      EXPECT_LE(cal.points[i].x, 1.0);
      EXPECT_GE(cal.points[i].y, 0.0);
      EXPECT_LE(cal.points[i].y, 1.0);
      if (i) EXPECT_GT(cal.points[i].x, cal.points[i - 1].x);
    }
  }
}

TEST(OneVsRest, ExtractsPositiveColumn) {
  const std::vector<std::vector<double>> proba{{0.7, 0.3}, {0.2, 0.8}};
  const std::vector<ClassIndex> actual{1, 1};
  const auto s = one_vs_rest(proba, actual, 1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s[0].score, 0.3);
  EXPECT_TRUE(s[0].positive);
  EXPECT_THROW(one_vs_rest(proba, std::vector<ClassIndex>{1}, 1), InvalidArgument);
}

}  // namespace
}  // namespace catclass
