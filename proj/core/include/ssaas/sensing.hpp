#pragma once

#include <cstddef>
#include <vector>

#include "ssaas/rng.hpp"
#include "ssaas/topology.hpp"

namespace ssaas {

/// Ground truth and per-node energy statistics, all in dB.
struct SensingScenario {
  bool pu_present = true;
  std::vector<double> energy_mean_present_db;
  std::vector<double> energy_mean_absent_db;
  double noise_std_db = 1.0;

  /// Same statistics at every node.
  static SensingScenario broadcast(std::size_t node_count, bool pu_present,
                                   double mean_present_db = 15.0,
                                   double mean_absent_db = 5.0,
                                   double noise_std_db = 1.0);

  std::size_t node_count() const noexcept {
    return energy_mean_present_db.size();
  }

  /// kInvalidParams for negative/non-finite noise or non-finite means,
  /// kInconsistentInputs when the mean vectors differ in length.
  void validate() const;
};

struct EnergyMeasurement {
  NodeId node = 0;
  double value_db = 0.0;
};

/// Energy detection at node i: configured mean plus Gaussian noise in dB.
/// Consumes exactly two uniform draws from rng.
EnergyMeasurement sense(const SensingScenario& scenario, NodeId i, Rng& rng);

/// One measurement per node, in node order.
std::vector<EnergyMeasurement> sense_all(const SensingScenario& scenario,
                                         Rng& rng);

}  // namespace ssaas
