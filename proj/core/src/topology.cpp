#include "ssaas/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "ssaas/error.hpp"
#include "ssaas/rng.hpp"

namespace ssaas {

std::string_view to_string(NodeRole role) {
  return role == NodeRole::kRsu ? "rsu" : "vehicle";
}

NodeRole node_role_from_string(std::string_view name) {
  if (name == "vehicle") return NodeRole::kVehicle;
  if (name == "rsu") return NodeRole::kRsu;
  throw Error(ErrorKind::kInvalidParams,
              "unknown node role '" + std::string(name) + "'");
}

Topology Topology::build(std::size_t node_count, std::span<const Edge> edges,
                         std::vector<NodeRole> roles) {
  if (node_count < 2) {
    throw Error(ErrorKind::kInvalidParams,
                "cooperative sensing needs at least two nodes");
  }
  if (roles.empty()) roles.assign(node_count, NodeRole::kVehicle);
  if (roles.size() != node_count) {
    throw Error(ErrorKind::kInvalidParams,
                "role list has " + std::to_string(roles.size()) +
                    " entries for " + std::to_string(node_count) + " nodes");
  }

  Topology t;
  t.node_count_ = node_count;
  t.adjacency_.assign(node_count * node_count, 0);
  t.neighbors_.resize(node_count);
  t.roles_ = std::move(roles);

  for (const Edge& e : edges) {
    if (e.a >= node_count || e.b >= node_count) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                      ") outside [0, " + std::to_string(node_count) + ")");
    }
    if (e.a == e.b) {
      throw Error(ErrorKind::kSelfLoop,
                  "self edge on node " + std::to_string(e.a));
    }
    auto& cell = t.adjacency_[e.a * node_count + e.b];
    if (cell != 0) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                      ") listed twice");
    }
    cell = 1;
    t.adjacency_[e.b * node_count + e.a] = 1;
    t.neighbors_[e.a].push_back(e.b);
    t.neighbors_[e.b].push_back(e.a);
  }

  for (auto& row : t.neighbors_) {
    std::sort(row.begin(), row.end());
    t.max_degree_ = std::max(t.max_degree_, row.size());
  }

  std::vector<bool> seen(node_count, false);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v : t.neighbors_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  if (reached != node_count) {
    throw Error(ErrorKind::kDisconnectedGraph,
                std::to_string(node_count - reached) +
                    " node(s) unreachable from node 0");
  }
  return t;
}

void Topology::check_index(NodeId i) const {
  if (i >= node_count_) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "node " + std::to_string(i) + " outside [0, " +
                    std::to_string(node_count_) + ")");
  }
}

bool Topology::adjacent(NodeId i, NodeId j) const {
  check_index(i);
  check_index(j);
  return adjacency_[i * node_count_ + j] != 0;
}

std::span<const NodeId> Topology::neighbors(NodeId i) const {
  check_index(i);
  return neighbors_[i];
}

NodeRole Topology::role(NodeId i) const {
  check_index(i);
  return roles_[i];
}

std::size_t Topology::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : neighbors_) twice += row.size();
  return twice / 2;
}

Topology make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Topology::build(n, edges);
}

Topology make_ring(std::size_t n) {
  if (n < 3) return make_path(n);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Topology::build(n, edges);
}

Topology make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Topology::build(n, edges);
}

Topology make_star(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i < n; ++i) edges.push_back({0, i});
  return Topology::build(n, edges);
}

Topology make_random_connected(std::size_t n, double edge_probability,
                               std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidParams,
                "edge_probability must lie in [0, 1]");
  }
  if (n < 2) return Topology::build(n, {});

  Rng rng(seed);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform01() * (i + 1));
    std::swap(order[i], order[std::min(j, i)]);
  }

  std::vector<std::uint8_t> used(n * n, 0);
  std::vector<Edge> edges;
  auto add = [&](NodeId a, NodeId b) {
    used[a * n + b] = used[b * n + a] = 1;
    edges.push_back({std::min(a, b), std::max(a, b)});
  };
  for (std::size_t k = 1; k < n; ++k) {
    const auto parent = static_cast<std::size_t>(rng.uniform01() * k);
    add(order[k], order[std::min(parent, k - 1)]);
  }
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (!used[i * n + j] && rng.bernoulli(edge_probability)) add(i, j);

  return Topology::build(n, edges);
}

}  // namespace ssaas
