#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ssaas {

using NodeId = std::size_t;

enum class NodeRole { kVehicle, kRsu };

std::string_view to_string(NodeRole role);
NodeRole node_role_from_string(std::string_view name);

/// Unordered node pair.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;
};

/// Connected undirected simple graph of sensing nodes (vehicles and RSUs).
///
/// Immutable once built. RSUs take part in consensus exactly like vehicles;
/// the role tag only lets scenarios configure them differently.
class Topology {
 public:
  /// Validates and builds. Throws Error with kIndexOutOfRange, kSelfLoop,
  /// kDuplicateEdge or kDisconnectedGraph; kInvalidParams for fewer than two
  /// nodes or a role list of the wrong length. An empty role list means all
  /// vehicles.
  static Topology build(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<NodeRole> roles = {});

  std::size_t size() const noexcept { return node_count_; }

  /// a_ij; throws kIndexOutOfRange.
  bool adjacent(NodeId i, NodeId j) const;

  /// N(i), ascending. Never contains i.
  std::span<const NodeId> neighbors(NodeId i) const;

  std::size_t degree(NodeId i) const { return neighbors(i).size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  NodeRole role(NodeId i) const;
  std::size_t edge_count() const noexcept;

  /// Exclusive upper bound on the consensus step size: 1 / max_i |N(i)|.
  double epsilon_upper_bound() const noexcept {
    return 1.0 / static_cast<double>(max_degree_);
  }

 private:
  Topology() = default;
  void check_index(NodeId i) const;

  std::size_t node_count_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::uint8_t> adjacency_;  // row-major n x n
  std::vector<std::vector<NodeId>> neighbors_;
  std::vector<NodeRole> roles_;
};

Topology make_path(std::size_t n);
/// Cycle 0-1-...-(n-1)-0. For n == 2 this degenerates to the single edge.
Topology make_ring(std::size_t n);
Topology make_complete(std::size_t n);
/// Node 0 is the hub.
Topology make_star(std::size_t n);
/// Random spanning tree plus each remaining pair with the given probability.
Topology make_random_connected(std::size_t n, double edge_probability,
                               std::uint64_t seed);

}  // namespace ssaas
