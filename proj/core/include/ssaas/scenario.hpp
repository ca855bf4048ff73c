#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ssaas/attack.hpp"
#include "ssaas/cloud.hpp"
#include "ssaas/consensus.hpp"
#include "ssaas/sensing.hpp"
#include "ssaas/topology.hpp"

namespace ssaas {

/// How to build the graph for a scenario. kind is one of "complete", "ring",
/// "star", "path", "random-connected" or "edges" (explicit list).
struct TopologySpec {
  std::string kind = "complete";
  std::vector<Edge> edges;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  std::vector<NodeRole> roles;

  Topology build(std::size_t node_count) const;
};

struct AvailabilitySweep {
  std::vector<double> grid{0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90};
  std::size_t trials = 10000;
  std::size_t rounds = 10;
  std::size_t n_hosts = 3;
  bool migration_enabled = true;
};

struct LatencySweep {
  std::vector<std::size_t> vm_counts{2, 4, 6, 8};
  std::size_t rounds = 10;
  LatencyModel local = LatencyModel::defaults(CloudKind::kLocal);
  LatencyModel conventional = LatencyModel::defaults(CloudKind::kConventional);
};

/// Deployment template plus the "scenario" extension block.
struct ScenarioConfig {
  DeploymentTemplate deployment;
  TopologySpec topology;
  SensingScenario sensing = SensingScenario::broadcast(6, true);
  std::vector<AttackProfile> attackers;
  std::uint64_t seed = 1;
  std::size_t repetitions = 100;
  AvailabilitySweep availability;
  LatencySweep latency;

  std::size_t node_count() const noexcept {
    return deployment.number_of_servers;
  }
};

/// Six-node complete graph, PU present, default sensing/trust/consensus
/// parameters and no attackers.
ScenarioConfig default_scenario(std::size_t node_count = 6);

/// Checks cross-field constraints. Throws Error(kSchemaViolation). Returns
/// warnings, currently only for an attacker fraction above one third.
std::vector<std::string> check_scenario(const ScenarioConfig& config);

/// Parses a full configuration document (template + optional "scenario").
/// Every violation is reported at once via Error(kSchemaViolation).
ScenarioConfig parse_scenario_config(const nlohmann::json& raw);
ScenarioConfig parse_scenario_config(std::string_view text);
/// kParseError when the file cannot be read or is not JSON.
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

struct RunSummary {
  std::size_t run_id = 0;
  bool converged = false;
  std::size_t iterations = 0;
  Decision decision = Decision::kUndecided;
  Decision ground_truth = Decision::kPresent;
  double x_star_db = 0.0;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct AvailabilityPoint {
  double p_av = 0.0;
  SensingMode mode = SensingMode::kTraditional;
  double p_success = 0.0;
  double analytic_p_success = 0.0;

  friend bool operator==(const AvailabilityPoint&,
                         const AvailabilityPoint&) = default;
};

struct LatencyPoint {
  std::size_t vm_count = 0;
  CloudKind kind = CloudKind::kLocal;
  double latency_ms = 0.0;

  friend bool operator==(const LatencyPoint&, const LatencyPoint&) = default;
};

struct ExperimentReport {
  std::vector<RunSummary> summaries;
  std::vector<ConsensusRun> runs;  // same order as summaries
  double accuracy = 0.0;
  double mean_iterations = 0.0;
  std::size_t median_iterations = 0;
  std::size_t p90_iterations = 0;
  std::vector<AvailabilityPoint> availability;
  std::vector<LatencyPoint> latency;
  std::vector<std::string> warnings;

  friend bool operator==(const ExperimentReport&,
                         const ExperimentReport&) = default;
};

struct RunOptions {
  /// Worker threads for repetitions. Output does not depend on this.
  unsigned jobs = 1;
  /// Keep full per-iteration traces in ExperimentReport::runs.
  bool keep_traces = true;
};

/// Repetition r uses seed + r for sensing noise and attacker draws.
ExperimentReport run_scenario(const ScenarioConfig& config,
                              const RunOptions& options = {});

/// Traditional and ssaas probability of success at each grid point, in grid
/// order, traditional first. Each (point, mode) pair has its own substream.
ExperimentReport sweep_availability(const ScenarioConfig& config,
                                    std::span<const double> p_av_grid,
                                    std::size_t trials);

/// Local and conventional latency at each VM count, local first.
ExperimentReport sweep_latency(const ScenarioConfig& config,
                               std::span<const std::size_t> vm_counts);

}  // namespace ssaas
