#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

// One end of an edge: a (vertex, port) pair.
struct HalfEdge {
  int vertex = 0;
  int port = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

struct Edge {
  HalfEdge a;
  HalfEdge b;
  bool operator==(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

/// Undirected simple graph with port labels on each edge end. The involution
/// zeta pairs the two ends of every edge. Immutable once built.
class PortGraph {
 public:
  /// Validates `edges` and builds the graph. `num_vertices` and `degree`
  /// default to the smallest values consistent with the edges. Throws
  /// StructuralError listing every violated invariant.
  static PortGraph from_edge_list(const EdgeList& edges,
                                  std::optional<int> num_vertices = std::nullopt,
                                  std::optional<int> degree = std::nullopt);

  int num_vertices() const noexcept { return num_vertices_; }
  int degree() const noexcept { return degree_; }
  int vertex_degree(int vertex) const;
  int num_edges() const noexcept { return num_edges_; }
  /// Nd, the dimension of the walker+coin space.
  int dimension() const noexcept { return num_vertices_ * degree_; }
  bool is_regular() const noexcept;

  bool is_used(int vertex, int port) const noexcept;
  /// Ports in use at `vertex`, ascending.
  std::vector<int> used_ports(int vertex) const;
  /// The other end of the edge at (vertex, port). DomainError for unused ports.
  HalfEdge zeta(int vertex, int port) const;
  HalfEdge zeta(HalfEdge h) const { return zeta(h.vertex, h.port); }

  /// Canonical edge list: one record per edge, lower half-edge first, sorted.
  EdgeList to_edge_list() const;

  /// Non-fatal findings, e.g. isolated vertices.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool operator==(const PortGraph& other) const;

 private:
  PortGraph() = default;

  int num_vertices_ = 0;
  int degree_ = 0;
  int num_edges_ = 0;
  std::vector<int> vertex_degrees_;
  std::vector<std::optional<HalfEdge>> zeta_;  // flat index vertex*degree+port
  std::vector<std::string> warnings_;
};

/// Cycle on n >= 3 vertices: zeta(j,0) = (j+1 mod n, 1).
PortGraph build_cycle(int n);

/// Deterministic greedy port labeling: edges in sorted (min,max) order, each
/// endpoint takes the smallest free port at its vertex.
EdgeList assign_ports(const std::vector<std::pair<int, int>>& adjacency);

/// 6-vertex, 8-edge, degree-4 general graph used as the non-regular example
/// throughout the tests (edges 01,02,03,04,12,23,34,45 with greedy ports).
PortGraph example_general_graph();

}  // namespace qwalk
