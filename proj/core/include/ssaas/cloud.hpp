#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ssaas/consensus.hpp"
#include "ssaas/rng.hpp"
#include "ssaas/topology.hpp"
#include "ssaas/trust.hpp"

namespace ssaas {

// ---------------------------------------------------------------------------
// Service deployment template
// ---------------------------------------------------------------------------

inline constexpr std::string_view kConsensusTrustAlgorithm = "consensus-trust";
inline constexpr std::string_view kDeviationTrust = "deviation";
inline constexpr std::string_view kFixedTrust = "fixed";

/// The "sensing_algorithm" block. An absent epsilon resolves to
/// 0.9 / max degree once the topology is known.
struct SensingAlgorithmSpec {
  std::string name{kConsensusTrustAlgorithm};
  std::optional<double> epsilon;
  double tolerance_db = 0.01;
  std::size_t max_iterations = 500;
  double threshold_db = kDefaultThresholdDb;

  ConsensusParams resolve(const Topology& topology) const;
};

/// The "trust_algorithm" block. "deviation" adapts trust every iteration;
/// "fixed" keeps every weight at initial_trust.
struct TrustAlgorithmSpec {
  std::string name{kDeviationTrust};
  TrustParams params;
};

/// What a tenant submits to deploy the sensing service: how many VMs
/// cooperate, a free-form description of the network, and which sensing and
/// trust schemes run with which parameters.
struct DeploymentTemplate {
  std::size_t number_of_servers = 6;
  nlohmann::json context = nlohmann::json::object();
  SensingAlgorithmSpec sensing_algorithm;
  TrustAlgorithmSpec trust_algorithm;
};

std::span<const std::string_view> registered_sensing_algorithms();
std::span<const std::string_view> registered_trust_algorithms();

/// Throws Error(kSchemaViolation) listing every violation found.
DeploymentTemplate validate_template(const nlohmann::json& raw);
/// As above, from text; kParseError when the text is not JSON.
DeploymentTemplate parse_template(std::string_view text);
nlohmann::json to_json(const DeploymentTemplate& tmpl);

// ---------------------------------------------------------------------------
// Availability and migration
// ---------------------------------------------------------------------------

enum class SensingMode { kTraditional, kSsaas };
std::string_view to_string(SensingMode mode);

/// Per-round Bernoulli availability of physical hosts.
///
/// Traditional sensing needs every physical vehicle up in every round. Under
/// the service, a VM whose host drops migrates to one of n_hosts independent
/// candidates, so a round fails for that VM only when all candidates are down.
struct AvailabilityModel {
  double p_av = 0.9;
  std::size_t n_nodes = 6;
  std::size_t rounds = 10;
  bool migration_enabled = true;
  std::size_t n_hosts = 3;

  /// Throws kInvalidParams.
  void validate() const;
};

/// Monte-Carlo estimate of the probability of success over `trials` runs.
double probability_of_success(const AvailabilityModel& model, SensingMode mode,
                              std::size_t trials, Rng& rng);

/// Closed form of the same quantity:
///   traditional  p^(n * rounds)
///   ssaas        (1 - (1 - p)^h)^(n * rounds), h = n_hosts (1 without migration)
double analytic_probability_of_success(const AvailabilityModel& model,
                                       SensingMode mode);

// ---------------------------------------------------------------------------
// Latency
// ---------------------------------------------------------------------------

enum class CloudKind { kLocal, kConventional };
std::string_view to_string(CloudKind kind);

struct LatencyModel {
  double trust_fetch_ms = 10.0;
  double exchange_ms = 20.0;
  CloudKind kind = CloudKind::kLocal;

  /// local: 10 ms fetch + 20 ms exchange; conventional: 40 ms + 20 ms.
  static LatencyModel defaults(CloudKind kind);
  void validate() const;
};

/// rounds * n_vms * (trust_fetch_ms + exchange_ms). Every VM fetches trust
/// and exchanges values once per round.
double estimate_latency(const LatencyModel& model, std::size_t n_vms,
                        std::size_t rounds);

}  // namespace ssaas
