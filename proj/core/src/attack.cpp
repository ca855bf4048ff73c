#include "ssaas/attack.hpp"

#include <cmath>
#include <string>

#include "ssaas/error.hpp"

namespace ssaas {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::kInvalidProfile,
                std::string(what) + " must be finite");
  }
}

// sign(sin(2 pi k / p)) evaluated on the integer phase, so the zero crossings
// at k = 0 and k = p/2 are exact.
int square_wave_sign(std::size_t k, std::size_t period) {
  const std::size_t phase = k % period;
  if (phase == 0 || 2 * phase == period) return 0;
  return 2 * phase < period ? 1 : -1;
}

}  // namespace

void AttackProfile::validate() const {
  std::visit(
      Overloaded{
          [](const ConstantAttack& a) { require_finite(a.value_db, "value_db"); },
          [](const OffsetAttack& a) { require_finite(a.offset_db, "offset_db"); },
          [](const UniformAttack& a) {
            require_finite(a.lo_db, "lo_db");
            require_finite(a.hi_db, "hi_db");
            if (a.lo_db > a.hi_db)
              throw Error(ErrorKind::kInvalidProfile, "lo_db exceeds hi_db");
          },
          [](const OscillatingAttack& a) {
            require_finite(a.base_db, "base_db");
            require_finite(a.amplitude_db, "amplitude_db");
            if (a.period < 1)
              throw Error(ErrorKind::kInvalidProfile, "period must be >= 1");
          },
      },
      strategy);
}

std::string_view AttackProfile::strategy_name() const {
  return std::visit(Overloaded{
                        [](const ConstantAttack&) { return "constant"; },
                        [](const OffsetAttack&) { return "offset"; },
                        [](const UniformAttack&) { return "random_uniform"; },
                        [](const OscillatingAttack&) { return "oscillating"; },
                    },
                    strategy);
}

double falsify(const AttackProfile& profile, std::size_t k,
               double true_value_db, Rng& rng) {
  profile.validate();
  return std::visit(
      Overloaded{
          [](const ConstantAttack& a) { return a.value_db; },
          [&](const OffsetAttack& a) { return true_value_db + a.offset_db; },
          [&](const UniformAttack& a) { return rng.uniform(a.lo_db, a.hi_db); },
          [&](const OscillatingAttack& a) {
            return a.base_db + a.amplitude_db * square_wave_sign(k, a.period);
          },
      },
      profile.strategy);
}

}  // namespace ssaas
