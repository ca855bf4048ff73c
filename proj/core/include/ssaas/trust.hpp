#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ssaas/topology.hpp"

namespace ssaas {

/// Parameters of the deviation-driven trust rule.
///
/// Each iteration, node i compares neighbor j's report against its own value:
///   T_ij <- clamp01(T_ij + learning_rate * (tol - |r_j - x_i|) / tol)
/// where tol is deviation_tolerance_db. Deviations below tol raise trust,
/// deviations above it lower it.
struct TrustParams {
  double initial_trust = 0.5;
  double learning_rate = 0.1;
  double deviation_tolerance_db = 2.0;
  /// When false, trust stays at its initial value (uniform fixed weights).
  bool adaptive = true;

  /// Throws kInvalidParams.
  void validate() const;

  friend bool operator==(const TrustParams&, const TrustParams&) = default;
};

/// Pairwise trust T_ij held by node i about neighbor j.
/// Entries for non-neighbor pairs exist but are never read.
class TrustState {
 public:
  /// T_ij = initial_trust for every neighbor pair.
  static TrustState init(const Topology& topology, const TrustParams& params);

  std::size_t size() const noexcept { return n_; }
  const TrustParams& params() const noexcept { return params_; }

  double trust(NodeId i, NodeId j) const;
  /// Overrides one entry; kInvalidParams outside [0, 1].
  void set_trust(NodeId i, NodeId j, double value);

  /// Consensus weight w_ij = T_ij / (1 + sum over N(i) of T_ij').
  /// kNotNeighbor when j is not in N(i).
  double weight(const Topology& topology, NodeId i, NodeId j) const;

  /// Applies one trust step for node i. `reports` must hold exactly N(i):
  /// kMissingReport for an absent neighbor, kUnknownNeighbor for an extra key.
  void update(const Topology& topology, NodeId i, double own_value_db,
              const std::map<NodeId, double>& reports);

  friend bool operator==(const TrustState&, const TrustState&) = default;

 private:
  void check_index(NodeId i) const;

  std::size_t n_ = 0;
  TrustParams params_;
  std::vector<double> trust_;  // row-major n x n
};

/// Single-entry form of the update rule, exposed for tests and tools.
double updated_trust(double current, double deviation_db,
                     const TrustParams& params);

}  // namespace ssaas
