#include "lucbh/core.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace lucbh;

namespace {

Instance group1_case2(double delta = 0.01) {
  return make_instance({0.8, 0.4, 0.4, 0.4, 0.4}, {0.9, 0.2, 0.2, 0.2, 0.2},
                       {200, 200, 200, 200, 200}, {0.4, 0.2, 0.2, 0.2, 0.2}, delta);
}

TEST(Instance, Group1Case2IsValidWithBestArmFirst) {
  const Instance inst = group1_case2();
  EXPECT_EQ(inst.k, 5u);
  EXPECT_EQ(inst.best_arm, 0u);
  for (bool ok : check_validity(inst)) EXPECT_TRUE(ok);
}

TEST(Instance, TiedBestArmIsRejected) {
  EXPECT_THROW(
      {
        try {
          make_instance({1.0, 1.0}, {0.0, 0.0}, {0, 0}, {0.0, 0.0}, 0.1);
        } catch (const Error& e) {
          EXPECT_EQ(e.code, Errc::duplicate_best);
          throw;
        }
      },
      Error);
}

TEST(Instance, SuboptimalTiesAreFine) {
  const Instance inst = make_instance({0.5, 0.1, 0.1}, {0.5, 0.1, 0.1}, {0, 0, 0},
                                      {0.0, 0.0, 0.0}, 0.1);
  EXPECT_EQ(inst.best_arm, 0u);
}

TEST(Instance, ZeroOfflineDataDegenerateCase) {
  const Instance inst =
      make_instance({0.0, -0.1}, {0.0, -0.1}, {0, 0}, {0.0, 0.0}, 0.5);
  const GapProfile g = gap_profile(inst);
  EXPECT_EQ(g.eta[0], BiasBound(0.0));
  EXPECT_EQ(g.eta[1], BiasBound(0.0));
}

TEST(Instance, LengthAndDeltaValidation) {
  EXPECT_THROW(make_instance({0.5}, {0.5}, {0}, {0.0}, 0.1), Error);
  EXPECT_THROW(make_instance({0.5, 0.1}, {0.5}, {0, 0}, {0.0, 0.0}, 0.1), Error);
  EXPECT_THROW(make_instance({0.5, 0.1}, {0.5, 0.1}, {0, 0}, {0.0, 0.0}, 0.0), Error);
  EXPECT_THROW(make_instance({0.5, 0.1}, {0.5, 0.1}, {0, 0}, {0.0, 0.0}, 1.0), Error);
  EXPECT_THROW(make_instance({0.5, 0.1}, {0.5, 0.1}, {-1, 0}, {0.0, 0.0}, 0.1), Error);
  EXPECT_THROW(make_instance({0.5, 0.1}, {0.5, 0.1}, {0, 0}, {-0.2, 0.0}, 0.1), Error);
}

TEST(GapProfile, Group1Case2Arm2) {
  const GapProfile g = gap_profile(group1_case2());
  EXPECT_DOUBLE_EQ(g.delta_i[1], 0.4);
  EXPECT_NEAR(g.eta[1].value(), 0.0, 1e-15);  // 0.2 + 0.2 - 0.4
}

TEST(GapProfile, Group1Case1BestArm) {
  const Instance inst = make_instance({0.8, 0.4, 0.4, 0.4, 0.4}, {0.4, 0.6, 0.6, 0.6, 0.6},
                                      {200, 200, 200, 200, 200}, {0.4, 0.2, 0.2, 0.2, 0.2}, 0.01);
  const GapProfile g = gap_profile(inst);
  EXPECT_DOUBLE_EQ(g.delta_i[0], 0.0);
  EXPECT_NEAR(g.eta[0].value(), 0.0, 1e-15);  // 0.4 + 0.4 - 0.8
}

TEST(GapProfile, UnboundedBiasPropagates) {
  const Instance inst = make_instance({0.8, 0.4}, {0.8, 0.4}, {10, 10},
                                      {BiasBound::unbounded(), 0.2}, 0.1);
  const GapProfile g = gap_profile(inst);
  EXPECT_TRUE(g.eta[0].is_unbounded());
  EXPECT_FALSE(g.eta[1].is_unbounded());
}

TEST(GapProfile, PureAndIdempotent) {
  std::mt19937_64 gen(7);
  for (int rep = 0; rep < 50; ++rep) {
    const Instance inst = lucbh::testing::random_valid_instance(gen);
    const GapProfile a = gap_profile(inst);
    const GapProfile b = gap_profile(inst);
    for (std::size_t i = 0; i < inst.k; ++i) {
      EXPECT_EQ(a.delta_i[i], b.delta_i[i]);
      EXPECT_EQ(a.eta[i], b.eta[i]);
    }
  }
}

TEST(GapProfile, DiscrepancyWithinTwiceBoundOnValidInstances) {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 200; ++rep) {
    const Instance inst = lucbh::testing::random_valid_instance(gen);
    const GapProfile g = gap_profile(inst);
    int zero_gaps = 0;
    for (std::size_t i = 0; i < inst.k; ++i) {
      if (g.delta_i[i] == 0.0) ++zero_gaps;
      ASSERT_FALSE(g.eta[i].is_unbounded());
      EXPECT_GE(g.eta[i].value(), -1e-12);
      EXPECT_LE(g.eta[i].value(), 2.0 * inst.v[i].value() + 1e-12);
    }
    EXPECT_EQ(zero_gaps, 1);
  }
}

TEST(Validity, UnderestimatedBoundIsFlagged) {
  // Suboptimal arms carry a true shift of 0.2 but declare only 0.1.
  const Instance inst = make_instance({0.8, 0.7, 0.6, 0.5, 0.4}, {0.9, 0.5, 0.4, 0.3, 0.2},
                                      {200, 200, 200, 200, 200}, {0.4, 0.1, 0.1, 0.1, 0.1}, 0.01);
  const auto ok = check_validity(inst);
  EXPECT_TRUE(ok[0]);
  for (std::size_t i = 1; i < inst.k; ++i) EXPECT_FALSE(ok[i]);
}

TEST(Validity, ExactBoundaryCounts) {
  const Instance inst =
      make_instance({0.8, 0.4}, {0.9, 0.2}, {10, 10}, {0.1, 0.2}, 0.1);
  const auto ok = check_validity(inst);
  EXPECT_TRUE(ok[0]);
  EXPECT_TRUE(ok[1]);
}

TEST(Validity, IgnoresOfflineSampleCounts) {
  const Instance inst =
      make_instance({0.8, 0.4}, {1.8, 0.4}, {0, 0}, {0.1, 0.0}, 0.1);
  const auto ok = check_validity(inst);
  EXPECT_FALSE(ok[0]);  // shift 1.0 > 0.1 even though t_s is 0
  EXPECT_TRUE(ok[1]);
}

}  // namespace
