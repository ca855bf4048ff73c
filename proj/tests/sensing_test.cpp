#include "ssaas/sensing.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ssaas/error.hpp"

namespace ssaas {
namespace {

TEST(Sensing, ZeroNoiseReturnsConfiguredMean) {
  Rng rng(3);
  auto present = SensingScenario::broadcast(4, true, 15.0, 5.0, 0.0);
  EXPECT_EQ(sense(present, 2, rng).value_db, 15.0);
  auto absent = SensingScenario::broadcast(4, false, 15.0, 5.0, 0.0);
  EXPECT_EQ(sense(absent, 1, rng).value_db, 5.0);
  EXPECT_EQ(sense(absent, 1, rng).node, 1u);
}

TEST(Sensing, PerNodeMeans) {
  SensingScenario s;
  s.energy_mean_present_db = {14.0, 16.0, 18.0};
  s.energy_mean_absent_db = {4.0, 5.0, 6.0};
  s.noise_std_db = 0.0;
  Rng rng(1);
  const auto all = sense_all(s, rng);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[2].value_db, 18.0);
}

TEST(Sensing, MonteCarloMeanAndStd) {
  constexpr int kDraws = 100000;
  auto s = SensingScenario::broadcast(1, true, 15.0, 5.0, 1.0);
  Rng rng(20240501);
  double sum = 0.0, sq = 0.0;
  for (int k = 0; k < kDraws; ++k) {
    const double v = sense(s, 0, rng).value_db;
    sum += v;
    sq += v * v;
  }
  const double mean = sum / kDraws;
  const double sd = std::sqrt(sq / kDraws - mean * mean);
  EXPECT_NEAR(mean, 15.0, 0.02);
  EXPECT_NEAR(sd, 1.0, 3.0 / std::sqrt(static_cast<double>(kDraws)));
}

TEST(Sensing, SameSeedSameSequence) {
  auto s = SensingScenario::broadcast(6, true);
  Rng a(77), b(77);
  EXPECT_EQ(sense_all(s, a).back().value_db, sense_all(s, b).back().value_db);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(sense(s, 3, a).value_db, sense(s, 3, b).value_db);
}

TEST(Sensing, Errors) {
  Rng rng(1);
  auto s = SensingScenario::broadcast(2, true);
  EXPECT_THROW(sense(s, 2, rng), Error);
  s.noise_std_db = -1.0;
  EXPECT_THROW(s.validate(), Error);
  auto t = SensingScenario::broadcast(2, true);
  t.energy_mean_absent_db.push_back(1.0);
  try {
    t.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistentInputs);
  }
}

}  // namespace
}  // namespace ssaas
