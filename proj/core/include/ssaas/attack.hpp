#pragma once

#include <cstddef>
#include <string_view>
#include <variant>

#include "ssaas/rng.hpp"
#include "ssaas/topology.hpp"

namespace ssaas {

// SSDF strategies. Each replaces the attacker's broadcast every iteration.

/// Always reports value_db.
struct ConstantAttack {
  double value_db = 0.0;
};

/// Reports its sensed value shifted by offset_db.
struct OffsetAttack {
  double offset_db = 0.0;
};

/// Fresh uniform draw from [lo_db, hi_db] each iteration.
struct UniformAttack {
  double lo_db = 0.0;
  double hi_db = 0.0;
};

/// Square wave base + amplitude * sign(sin(2 pi k / period)).
struct OscillatingAttack {
  double base_db = 0.0;
  double amplitude_db = 0.0;
  std::size_t period = 1;
};

using AttackStrategy =
    std::variant<ConstantAttack, OffsetAttack, UniformAttack, OscillatingAttack>;

struct AttackProfile {
  NodeId node = 0;
  AttackStrategy strategy;

  /// kInvalidProfile on lo > hi, period < 1 or non-finite parameters.
  void validate() const;
  std::string_view strategy_name() const;
};

/// Value broadcast by the attacker at iteration k. Only UniformAttack
/// consumes randomness (one uniform draw).
double falsify(const AttackProfile& profile, std::size_t k,
               double true_value_db, Rng& rng);

}  // namespace ssaas
