#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ssaas/attack.hpp"
#include "ssaas/rng.hpp"
#include "ssaas/sensing.hpp"
#include "ssaas/topology.hpp"
#include "ssaas/trust.hpp"

namespace ssaas {

/// λ used for the PU-present decision unless configured otherwise.
inline constexpr double kDefaultThresholdDb = 11.4;

struct ConsensusParams {
  double epsilon = 0.0;
  double tolerance_db = 0.01;
  std::size_t max_iterations = 500;
  double threshold_db = kDefaultThresholdDb;

  /// epsilon = 0.9 / max degree, the remaining fields at their defaults.
  static ConsensusParams defaults_for(const Topology& topology);

  /// kEpsilonOutOfRange unless 0 < epsilon < 1 / max degree;
  /// kInvalidParams for tolerance_db <= 0, max_iterations == 0 or a
  /// non-finite threshold.
  void validate(const Topology& topology) const;
};

enum class Decision { kPresent, kAbsent, kUndecided };

std::string_view to_string(Decision decision);

/// Threshold test on the consensus value. The boundary counts as present.
Decision decide(double consensus_value_db, double threshold_db);

/// One synchronous weighted-average consensus step:
///   x_i' = x_i + epsilon * sum_{j in N(i)} w_ij * (reported_j - x_i)
/// applied at every node, with w_ij from `trust`. Callers that simulate
/// attackers overwrite the attacker entries of the result.
std::vector<double> consensus_step(const Topology& topology,
                                   std::span<const double> values,
                                   std::span<const double> reported,
                                   const TrustState& trust, double epsilon);

/// Full record of one sensing round. Index k of values/reported/trust is
/// iteration k, for k = 0 .. iterations_used inclusive.
struct ConsensusRun {
  std::vector<std::vector<double>> values;    // internal x(k)
  std::vector<std::vector<double>> reported;  // what each node broadcast at k
  std::vector<TrustState> trust;              // trust in force at the start of k
  std::vector<bool> attacker;                 // per node
  std::vector<std::vector<NodeId>> observers; // honest neighbors of each node
  bool converged = false;
  std::size_t iterations_used = 0;
  Decision decision = Decision::kUndecided;
  double consensus_value_db = 0.0;  // honest mean at the stopping iteration
  double final_spread_db = 0.0;     // honest max - min at the stopping iteration

  const TrustState& final_trust() const { return trust.back(); }
  const std::vector<double>& final_values() const { return values.back(); }

  /// Lowest trust held toward node j by its honest neighbors at iteration k;
  /// NaN when j has none.
  double min_trust_toward(std::size_t k, NodeId j) const;

  friend bool operator==(const ConsensusRun&, const ConsensusRun&) = default;
};

/// max - min of the values at non-attacker nodes.
double honest_spread(std::span<const double> values,
                     const std::vector<bool>& attacker);

/// Runs sensing-consensus to a decision.
///
/// Per iteration k, synchronously across nodes: every node broadcasts
/// (attackers through falsify()); the run stops if the honest spread is at or
/// below tolerance_db, or k reached max_iterations; otherwise each honest node
/// updates trust toward its neighbors (when trust is adaptive) and then its
/// value. Attacker internals never change.
///
/// Throws kEpsilonOutOfRange, and kInconsistentInputs when `initial` does not
/// cover each node exactly once, the trust state has the wrong size, or the
/// attacker list repeats a node, names an unknown node or covers every node.
ConsensusRun run_consensus(const Topology& topology,
                           std::span<const EnergyMeasurement> initial,
                           TrustState trust, const ConsensusParams& params,
                           std::span<const AttackProfile> attackers, Rng& rng);

}  // namespace ssaas
