#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into consensus_step, TrustState::weight or the analytic availability code;
// each is a from-scratch evaluation on plain matrices.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <random>
#include <utility>
#include <vector>

namespace ssaas::oracle {

using Matrix = std::vector<std::vector<double>>;
using Adjacency = std::vector<std::vector<int>>;

inline Adjacency adjacency_from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Adjacency a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::vector<std::size_t> neighbors_by_scan(const Adjacency& a,
                                                  std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[i][j] == 1) out.push_back(j);
  return out;
}

inline std::size_t max_row_sum(const Adjacency& a) {
  std::size_t best = 0;
  for (const auto& row : a) {
    std::size_t s = 0;
    for (int v : row) s += static_cast<std::size_t>(v);
    best = std::max(best, s);
  }
  return best;
}

inline bool connected_by_bfs(const Adjacency& a) {
  std::vector<bool> seen(a.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[u][v] && !seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  return count == a.size();
}

/// Every labeled simple graph on n nodes, as edge lists, connected ones only.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
all_connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask & (1u << b)) edges.push_back(slots[b]);
    if (connected_by_bfs(adjacency_from_edges(n, edges))) out.push_back(edges);
  }
  return out;
}

/// Direct evaluation of x_i + eps * sum_j a_ij * T_ij / (1 + sum_l a_il T_il)
/// * (r_j - x_i), looping over the full matrix.
inline std::vector<double> naive_consensus_step(const Adjacency& a,
                                                const Matrix& trust,
                                                const std::vector<double>& x,
                                                const std::vector<double>& r,
                                                double eps) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double denom = 1.0;
    for (std::size_t l = 0; l < n; ++l) denom += a[i][l] * trust[i][l];
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      acc += a[i][j] * (trust[i][j] / denom) * (r[j] - x[i]);
    out[i] = x[i] + eps * acc;
  }
  return out;
}

inline double traditional_success(double p, std::size_t n, std::size_t rounds) {
  double s = 1.0;
  for (std::size_t k = 0; k < n * rounds; ++k) s *= p;
  return s;
}

inline double ssaas_success(double p, std::size_t n, std::size_t rounds,
                            std::size_t hosts) {
  double all_down = 1.0;
  for (std::size_t h = 0; h < hosts; ++h) all_down *= (1.0 - p);
  double s = 1.0;
  for (std::size_t k = 0; k < n * rounds; ++k) s *= (1.0 - all_down);
  return s;
}

/// 3-sigma binomial band around probability p for `trials` draws.
inline double binomial_band(double p, std::size_t trials) {
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace ssaas::oracle
