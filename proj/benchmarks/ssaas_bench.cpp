#include <vector>

#include <benchmark/benchmark.h>

#include "ssaas/scenario.hpp"

using namespace ssaas;

static void BM_ConsensusStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Topology t = make_random_connected(n, 0.3, 11);
  const TrustState trust = TrustState::init(t, {});
  Rng rng(3);
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal(15.0, 1.0);
  const double eps = ConsensusParams::defaults_for(t).epsilon;
  for (auto _ : state) {
    auto next = consensus_step(t, x, x, trust, eps);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_ConsensusStep)->RangeMultiplier(4)->Range(8, 512);

// One sensing round on the 6-node complete graph with a constant 0 dB attacker.
static void BM_RunConsensusOneAttacker(benchmark::State& state) {
  const Topology t = make_complete(6);
  const auto params = ConsensusParams::defaults_for(t);
  const std::vector<AttackProfile> attackers{{0, ConstantAttack{0.0}}};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    const auto init = sense_all(SensingScenario::broadcast(6, true), rng);
    auto run = run_consensus(t, init, TrustState::init(t, {}), params, attackers, rng);
    benchmark::DoNotOptimize(run.iterations_used);
  }
}
BENCHMARK(BM_RunConsensusOneAttacker);

static void BM_ProbabilityOfSuccess(benchmark::State& state) {
  const AvailabilityModel model{.p_av = 0.8};
  const auto mode = state.range(0) == 0 ? SensingMode::kTraditional : SensingMode::kSsaas;
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(probability_of_success(model, mode, 10000, rng));
  }
}
BENCHMARK(BM_ProbabilityOfSuccess)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
