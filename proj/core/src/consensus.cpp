#include "ssaas/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "ssaas/error.hpp"

namespace ssaas {

ConsensusParams ConsensusParams::defaults_for(const Topology& topology) {
  ConsensusParams p;
  p.epsilon = 0.9 * topology.epsilon_upper_bound();
  return p;
}

void ConsensusParams::validate(const Topology& topology) const {
  const double bound = topology.epsilon_upper_bound();
  if (!(epsilon > 0.0 && epsilon < bound)) {
    throw Error(ErrorKind::kEpsilonOutOfRange,
                "epsilon " + std::to_string(epsilon) + " outside (0, " +
                    std::to_string(bound) + ")");
  }
  if (!(tolerance_db > 0.0)) {
    throw Error(ErrorKind::kInvalidParams, "tolerance_db must be > 0");
  }
  if (max_iterations < 1) {
    throw Error(ErrorKind::kInvalidParams, "max_iterations must be >= 1");
  }
  if (!std::isfinite(threshold_db)) {
    throw Error(ErrorKind::kInvalidParams, "threshold_db must be finite");
  }
}

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::kPresent: return "present";
    case Decision::kAbsent: return "absent";
    case Decision::kUndecided: return "undecided";
  }
  return "undecided";
}

Decision decide(double consensus_value_db, double threshold_db) {
  return consensus_value_db >= threshold_db ? Decision::kPresent
                                            : Decision::kAbsent;
}

std::vector<double> consensus_step(const Topology& topology,
                                   std::span<const double> values,
                                   std::span<const double> reported,
                                   const TrustState& trust, double epsilon) {
  const std::size_t n = topology.size();
  if (!(epsilon > 0.0 && epsilon < topology.epsilon_upper_bound())) {
    throw Error(ErrorKind::kEpsilonOutOfRange,
                "epsilon " + std::to_string(epsilon) + " violates the bound");
  }
  if (values.size() != n || reported.size() != n || trust.size() != n) {
    throw Error(ErrorKind::kInconsistentInputs,
                "value, report and trust sizes must match the topology");
  }

  std::vector<double> next(values.begin(), values.end());
  for (NodeId i = 0; i < n; ++i) {
    const auto nbrs = topology.neighbors(i);
    double denominator = 1.0;
    for (NodeId j : nbrs) denominator += trust.trust(i, j);
    double pull = 0.0;
    for (NodeId j : nbrs)
      pull += trust.trust(i, j) / denominator * (reported[j] - values[i]);
    next[i] = values[i] + epsilon * pull;
  }
  return next;
}

double ConsensusRun::min_trust_toward(std::size_t k, NodeId j) const {
  const TrustState& t = trust.at(k);
  double lowest = std::numeric_limits<double>::quiet_NaN();
  for (NodeId i : observers.at(j)) {
    const double v = t.trust(i, j);
    if (!(v >= lowest)) lowest = v;
  }
  return lowest;
}

double honest_spread(std::span<const double> values,
                     const std::vector<bool>& attacker) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (attacker[i]) continue;
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
  }
  return hi - lo;
}

ConsensusRun run_consensus(const Topology& topology,
                           std::span<const EnergyMeasurement> initial,
                           TrustState trust, const ConsensusParams& params,
                           std::span<const AttackProfile> attackers, Rng& rng) {
  params.validate(topology);
  const std::size_t n = topology.size();

  if (trust.size() != n) {
    throw Error(ErrorKind::kInconsistentInputs,
                "trust state size does not match topology");
  }
  std::vector<double> x(n, 0.0);
  std::vector<bool> covered(n, false);
  if (initial.size() != n) {
    throw Error(ErrorKind::kInconsistentInputs,
                "expected one initial measurement per node");
  }
  for (const auto& m : initial) {
    if (m.node >= n || covered[m.node] || !std::isfinite(m.value_db)) {
      throw Error(ErrorKind::kInconsistentInputs,
                  "bad or repeated initial measurement for node " +
                      std::to_string(m.node));
    }
    covered[m.node] = true;
    x[m.node] = m.value_db;
  }

  ConsensusRun run;
  run.attacker.assign(n, false);
  for (const auto& a : attackers) {
    if (a.node >= n || run.attacker[a.node]) {
      throw Error(ErrorKind::kInconsistentInputs,
                  "attacker node " + std::to_string(a.node) +
                      " is out of range or listed twice");
    }
    a.validate();
    run.attacker[a.node] = true;
  }
  if (attackers.size() >= n) {
    throw Error(ErrorKind::kInconsistentInputs, "no honest node left");
  }
  run.observers.resize(n);
  for (NodeId j = 0; j < n; ++j)
    for (NodeId i : topology.neighbors(j))
      if (!run.attacker[i]) run.observers[j].push_back(i);

  std::map<NodeId, double> reports;
  for (std::size_t k = 0;; ++k) {
    std::vector<double> broadcast = x;
    for (const auto& a : attackers)
      broadcast[a.node] = falsify(a, k, x[a.node], rng);

    run.values.push_back(x);
    run.reported.push_back(broadcast);
    run.trust.push_back(trust);

    const double spread = honest_spread(x, run.attacker);
    if (spread <= params.tolerance_db || k == params.max_iterations) {
      run.converged = spread <= params.tolerance_db;
      run.iterations_used = k;
      run.final_spread_db = spread;
      break;
    }

    if (trust.params().adaptive) {
      for (NodeId i = 0; i < n; ++i) {
        if (run.attacker[i]) continue;
        reports.clear();
        for (NodeId j : topology.neighbors(i)) reports.emplace(j, broadcast[j]);
        trust.update(topology, i, x[i], reports);
      }
    }

    std::vector<double> next =
        consensus_step(topology, x, broadcast, trust, params.epsilon);
    for (const auto& a : attackers) next[a.node] = x[a.node];
    x = std::move(next);
  }

  double sum = 0.0;
  std::size_t honest = 0;
  for (NodeId i = 0; i < n; ++i) {
    if (run.attacker[i]) continue;
    sum += x[i];
    ++honest;
  }
  run.consensus_value_db = sum / static_cast<double>(honest);
  run.decision = run.converged
                     ? decide(run.consensus_value_db, params.threshold_db)
                     : Decision::kUndecided;
  return run;
}

}  // namespace ssaas
