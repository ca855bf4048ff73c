#include <gtest/gtest.h>

#include "properties.hpp"

namespace ssaas {
namespace {

constexpr std::size_t kCases = 1000;

TEST(Properties, TrustClamped) {
  const auto r = props::trust_stays_in_unit_interval(kCases, 101);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, WeightSumBelowOne) {
  const auto r = props::weights_sum_below_one(kCases, 102);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, HullContainment) {
  const auto r = props::step_stays_in_hull(kCases, 103);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, FixedPoint) {
  const auto r = props::uniform_vector_is_fixed(kCases, 104);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, SpreadNonIncreasing) {
  const auto r = props::spread_shrinks_without_attackers(kCases, 105);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, ConvergesAtDefaultEpsilon) {
  const auto r = props::spread_shrinks_without_attackers(kCases, 115, true);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, BitIdenticalReruns) {
  const auto r = props::reruns_are_identical(kCases, 106);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(Properties, ExhaustiveSmallGraphOracle) {
  const auto r = props::step_matches_naive_on_all_small_graphs(107);
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_EQ(r.cases, 1u + 4u + 38u + 728u);  // connected labeled graphs, n = 2..5
}

}  // namespace
}  // namespace ssaas
