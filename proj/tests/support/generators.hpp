#pragma once

// Hand-rolled generators for the property suites. Deterministic per seed.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ssaas/topology.hpp"
#include "ssaas/trust.hpp"

namespace ssaas::gen {

struct Case {
  std::mt19937_64 rng;
  explicit Case(std::uint64_t seed) : rng(seed) {}

  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  Topology topology(std::size_t min_n, std::size_t max_n) {
    const std::size_t n = index(min_n, max_n);
    return make_random_connected(n, real(0.0, 1.0), rng());
  }

  std::vector<double> values(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = real(lo, hi);
    return v;
  }

  TrustState trust(const Topology& t, double lo = 0.0, double hi = 1.0,
                   bool adaptive = true) {
    TrustParams p;
    p.adaptive = adaptive;
    TrustState ts = TrustState::init(t, p);
    for (NodeId i = 0; i < t.size(); ++i)
      for (NodeId j : t.neighbors(i)) ts.set_trust(i, j, real(lo, hi));
    return ts;
  }

  /// epsilon strictly inside (0, bound).
  double epsilon(const Topology& t) {
    return t.epsilon_upper_bound() * real(0.01, 0.99);
  }
};

}  // namespace ssaas::gen
