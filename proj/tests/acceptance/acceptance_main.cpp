// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.
//
//   ssaas_acceptance                 run all criteria
//   ssaas_acceptance --criterion 4   run one

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "properties.hpp"
#include "ssaas/scenario.hpp"

namespace {

using namespace ssaas;
using Clock = std::chrono::steady_clock;

const std::filesystem::path kConfigs = SSAAS_CONFIG_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 100 repetitions, one constant 0 dB attacker on a 6-node complete graph.
Outcome one_attacker() {
  const auto config = load_scenario_config(kConfigs / "one_attacker.json");
  const auto start = Clock::now();
  const auto report = run_scenario(config);
  const double elapsed = seconds_since(start);

  std::size_t present = 0, tight = 0, isolated = 0;
  double worst_trust = 0.0, worst_spread = 0.0;
  const NodeId attacker = config.attackers.at(0).node;
  for (const auto& run : report.runs) {
    present += run.decision == Decision::kPresent;
    tight += run.converged && run.final_spread_db <= 0.01;
    worst_spread = std::max(worst_spread, run.final_spread_db);
    bool all_low = true;
    for (NodeId i = 0; i < run.attacker.size(); ++i) {
      if (run.attacker[i]) continue;
      const double t = run.final_trust().trust(i, attacker);
      worst_trust = std::max(worst_trust, t);
      all_low = all_low && t < 0.1;
    }
    isolated += all_low;
  }
  const std::size_t reps = report.runs.size();
  std::ostringstream os;
  os << "present " << present << "/" << reps << ", spread<=0.01 " << tight << "/"
     << reps << " (max " << worst_spread << "), attacker trust<0.1 " << isolated
     << "/" << reps << " (max " << worst_trust << "), " << elapsed << " s";
  return {reps == 100 && present == reps && tight == reps && isolated == reps &&
              elapsed < 1.0,
          os.str()};
}

// Adding a random_uniform [0, 5] dB attacker at node 3 must slow convergence.
Outcome second_attacker_slows() {
  const auto one = run_scenario(load_scenario_config(kConfigs / "one_attacker.json"));
  const auto two = run_scenario(load_scenario_config(kConfigs / "two_attackers.json"));
  std::ostringstream os;
  os << "mean iterations one attacker " << one.mean_iterations
     << ", two attackers " << two.mean_iterations << " (accuracy "
     << two.accuracy << ")";
  return {two.summaries.size() == 100 && one.summaries.size() == 100 &&
              two.mean_iterations > one.mean_iterations,
          os.str()};
}

// Constant -50 dB attacker with fixed uniform weights vs adaptive trust.
Outcome trust_is_necessary() {
  const auto disabled = load_scenario_config(kConfigs / "trust_disabled.json");
  ScenarioConfig enabled = disabled;
  enabled.deployment.trust_algorithm = TrustAlgorithmSpec{};

  const auto off = run_scenario(disabled);
  const auto on = run_scenario(enabled);
  std::size_t fooled = 0, correct = 0;
  for (const auto& s : off.summaries) fooled += s.decision != Decision::kPresent;
  for (const auto& s : on.summaries) correct += s.decision == Decision::kPresent;
  const double fooled_frac = static_cast<double>(fooled) / off.summaries.size();
  std::ostringstream os;
  os << "trust off: absent/undecided " << fooled << "/" << off.summaries.size()
     << "; trust on: present " << correct << "/" << on.summaries.size();
  return {fooled_frac >= 0.9 && correct == on.summaries.size(), os.str()};
}

// P_s(ssaas) >= P_s(traditional) on the 0.60..0.90 grid, traditional within
// 0.02 of p^(n*rounds).
Outcome availability_curves() {
  const ScenarioConfig config = load_scenario_config(kConfigs / "one_attacker.json");
  const std::vector<double> grid{0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90};
  const auto start = Clock::now();
  const auto report = sweep_availability(config, grid, 10000);
  const double elapsed = seconds_since(start);

  bool ok = report.availability.size() == 2 * grid.size();
  double worst_err = 0.0;
  std::ostringstream os;
  for (std::size_t g = 0; ok && g < grid.size(); ++g) {
    const auto& trad = report.availability[2 * g];
    const auto& ss = report.availability[2 * g + 1];
    const double oracle = oracle::traditional_success(
        grid[g], config.node_count(), config.availability.rounds);
    worst_err = std::max(worst_err, std::abs(trad.p_success - oracle));
    ok = ok && ss.p_success >= trad.p_success &&
         std::abs(trad.p_success - oracle) <= 0.02;
    os << grid[g] << ":" << trad.p_success << "/" << ss.p_success << " ";
  }
  os << "| max |trad-analytic| " << worst_err << ", " << elapsed << " s";
  return {ok && elapsed < 5.0, os.str()};
}

Outcome latency_curves() {
  const ScenarioConfig config = default_scenario(6);
  const std::vector<std::size_t> counts{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto report = sweep_latency(config, counts);
  bool ok = report.latency.size() == 2 * counts.size();
  double lo = 1e9, hi = 0.0;
  for (std::size_t k = 0; ok && k < counts.size(); ++k) {
    const auto& local = report.latency[2 * k];
    const auto& conv = report.latency[2 * k + 1];
    if (k > 0) {
      ok = ok && local.latency_ms > report.latency[2 * k - 2].latency_ms &&
           conv.latency_ms > report.latency[2 * k - 1].latency_ms;
    }
    const double ratio = conv.latency_ms / local.latency_ms;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  std::ostringstream os;
  os << "strictly increasing: " << (ok ? "yes" : "no") << ", ratio in [" << lo
     << ", " << hi << "]";
  return {ok && lo >= 1.8 && hi <= 2.2, os.str()};
}

Outcome oracle_equivalence() {
  double worst = 0.0;
  const auto r = props::step_matches_naive_on_all_small_graphs(6006, &worst);
  std::ostringstream os;
  os << r.cases << " connected labeled graphs (n=2..5), max |diff| " << worst
     << " dB" << (r.ok() ? "" : "; " + r.failure);
  return {r.ok() && r.cases == 771, os.str()};
}

Outcome invariant_suite() {
  constexpr std::size_t kCases = 1000;
  const auto start = Clock::now();
  const std::vector<std::pair<const char*, props::Result>> results{
      {"trust-clamp", props::trust_stays_in_unit_interval(kCases, 7001)},
      {"weight-sum", props::weights_sum_below_one(kCases, 7002)},
      {"hull", props::step_stays_in_hull(kCases, 7003)},
      {"fixed-point", props::uniform_vector_is_fixed(kCases, 7004)},
      {"spread", props::spread_shrinks_without_attackers(kCases, 7005)},
      {"rerun", props::reruns_are_identical(kCases, 7006)},
  };
  const double elapsed = seconds_since(start);
  bool ok = elapsed < 30.0;
  std::ostringstream os;
  for (const auto& [name, r] : results) {
    ok = ok && r.ok() && r.cases >= kCases;
    os << name << "=" << (r.ok() ? "ok" : r.failure) << "(" << r.cases << ") ";
  }
  os << "| " << elapsed << " s";
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ssaas acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-7)")
      ->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"one-attacker reproduction", one_attacker},
      {"second attacker slows convergence", second_attacker_slows},
      {"trust necessity", trust_is_necessary},
      {"probability of success curves", availability_curves},
      {"latency curves", latency_curves},
      {"consensus step oracle equivalence", oracle_equivalence},
      {"invariant suite", invariant_suite},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<std::size_t>(only) != k + 1) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] AC%zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first, o.detail.c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
