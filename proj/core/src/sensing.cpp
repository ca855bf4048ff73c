#include "ssaas/sensing.hpp"

#include <cmath>
#include <string>

#include "ssaas/error.hpp"

namespace ssaas {

SensingScenario SensingScenario::broadcast(std::size_t node_count,
                                           bool pu_present,
                                           double mean_present_db,
                                           double mean_absent_db,
                                           double noise_std_db) {
  SensingScenario s;
  s.pu_present = pu_present;
  s.energy_mean_present_db.assign(node_count, mean_present_db);
  s.energy_mean_absent_db.assign(node_count, mean_absent_db);
  s.noise_std_db = noise_std_db;
  return s;
}

void SensingScenario::validate() const {
  if (!std::isfinite(noise_std_db) || noise_std_db < 0.0) {
    throw Error(ErrorKind::kInvalidParams,
                "noise_std_db must be finite and >= 0");
  }
  if (energy_mean_present_db.size() != energy_mean_absent_db.size()) {
    throw Error(ErrorKind::kInconsistentInputs,
                "present/absent mean vectors differ in length");
  }
  for (double m : energy_mean_present_db)
    if (!std::isfinite(m))
      throw Error(ErrorKind::kInvalidParams, "non-finite present mean");
  for (double m : energy_mean_absent_db)
    if (!std::isfinite(m))
      throw Error(ErrorKind::kInvalidParams, "non-finite absent mean");
}

EnergyMeasurement sense(const SensingScenario& scenario, NodeId i, Rng& rng) {
  if (i >= scenario.node_count()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "node " + std::to_string(i) + " has no sensing statistics");
  }
  const double mean = scenario.pu_present ? scenario.energy_mean_present_db[i]
                                          : scenario.energy_mean_absent_db[i];
  return {i, rng.normal(mean, scenario.noise_std_db)};
}

std::vector<EnergyMeasurement> sense_all(const SensingScenario& scenario,
                                         Rng& rng) {
  scenario.validate();
  std::vector<EnergyMeasurement> out;
  out.reserve(scenario.node_count());
  for (NodeId i = 0; i < scenario.node_count(); ++i)
    out.push_back(sense(scenario, i, rng));
  return out;
}

}  // namespace ssaas
