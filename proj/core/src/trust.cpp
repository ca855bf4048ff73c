#include "ssaas/trust.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssaas/error.hpp"

namespace ssaas {

void TrustParams::validate() const {
  if (!(initial_trust >= 0.0 && initial_trust <= 1.0)) {
    throw Error(ErrorKind::kInvalidParams, "initial_trust must lie in [0, 1]");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorKind::kInvalidParams, "learning_rate must be > 0");
  }
  if (!(deviation_tolerance_db > 0.0) ||
      !std::isfinite(deviation_tolerance_db)) {
    throw Error(ErrorKind::kInvalidParams,
                "deviation_tolerance_db must be > 0");
  }
}

double updated_trust(double current, double deviation_db,
                     const TrustParams& params) {
  const double tol = params.deviation_tolerance_db;
  const double raw = current + params.learning_rate * (tol - deviation_db) / tol;
  return std::clamp(raw, 0.0, 1.0);
}

TrustState TrustState::init(const Topology& topology,
                            const TrustParams& params) {
  params.validate();
  TrustState ts;
  ts.n_ = topology.size();
  ts.params_ = params;
  ts.trust_.assign(ts.n_ * ts.n_, 0.0);
  for (NodeId i = 0; i < ts.n_; ++i)
    for (NodeId j : topology.neighbors(i))
      ts.trust_[i * ts.n_ + j] = params.initial_trust;
  return ts;
}

void TrustState::check_index(NodeId i) const {
  if (i >= n_) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "node " + std::to_string(i) + " outside trust state of size " +
                    std::to_string(n_));
  }
}

double TrustState::trust(NodeId i, NodeId j) const {
  check_index(i);
  check_index(j);
  return trust_[i * n_ + j];
}

void TrustState::set_trust(NodeId i, NodeId j, double value) {
  check_index(i);
  check_index(j);
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::kInvalidParams, "trust must lie in [0, 1]");
  }
  trust_[i * n_ + j] = value;
}

double TrustState::weight(const Topology& topology, NodeId i, NodeId j) const {
  if (!topology.adjacent(i, j)) {
    throw Error(ErrorKind::kNotNeighbor, std::to_string(j) +
                                             " is not a neighbor of " +
                                             std::to_string(i));
  }
  double denominator = 1.0;
  for (NodeId k : topology.neighbors(i)) denominator += trust_[i * n_ + k];
  return trust_[i * n_ + j] / denominator;
}

void TrustState::update(const Topology& topology, NodeId i,
                        double own_value_db,
                        const std::map<NodeId, double>& reports) {
  check_index(i);
  const auto neighbors = topology.neighbors(i);
  for (const auto& [j, value] : reports) {
    if (!std::binary_search(neighbors.begin(), neighbors.end(), j)) {
      throw Error(ErrorKind::kUnknownNeighbor,
                  "report from " + std::to_string(j) +
                      ", which is not a neighbor of " + std::to_string(i));
    }
  }
  for (NodeId j : neighbors) {
    if (!reports.contains(j)) {
      throw Error(ErrorKind::kMissingReport,
                  "node " + std::to_string(i) + " has no report from " +
                      std::to_string(j));
    }
  }
  for (NodeId j : neighbors) {
    double& t = trust_[i * n_ + j];
    t = updated_trust(t, std::abs(reports.at(j) - own_value_db), params_);
  }
}

}  // namespace ssaas
