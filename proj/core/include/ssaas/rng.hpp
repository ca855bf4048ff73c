#pragma once

#include <cstdint>
#include <random>

namespace ssaas {

/// Seeded random stream shared by sensing, attack, and availability draws.
///
/// Variates are derived from raw mt19937_64 output with fixed formulas
/// (53-bit uniform, Box-Muller normal) rather than std distributions, whose
/// output is implementation-defined. Traces are therefore identical across
/// standard libraries for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform01();
  /// Uniform on [lo, hi]; returns lo when lo == hi.
  double uniform(double lo, double hi);
  double normal(double mean, double stddev);
  /// True with probability p; p <= 0 never, p >= 1 always.
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 mix of (base, stream); used to give sweep points and
/// concurrent workers independent substreams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace ssaas
