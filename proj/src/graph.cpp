#include "qwalk/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qwalk {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out = "invalid graph:";
  for (const auto& item : items) out += "\n  - " + item;
  return out;
}

std::string describe(HalfEdge h) {
  std::ostringstream os;
  os << "(" << h.vertex << "," << h.port << ")";
  return os.str();
}

}  // namespace

StructuralError::StructuralError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)) {}

PortGraph PortGraph::from_edge_list(const EdgeList& edges, std::optional<int> num_vertices,
                                    std::optional<int> degree) {
  std::vector<std::string> problems;

  int max_vertex = -1;
  int max_port = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const HalfEdge& h : {edges[i].a, edges[i].b}) {
      if (h.vertex < 0 || h.port < 0) {
        problems.push_back("edge " + std::to_string(i) + ": negative index in " + describe(h));
      }
      max_vertex = std::max(max_vertex, h.vertex);
      max_port = std::max(max_port, h.port);
    }
  }

  const int n = num_vertices.value_or(std::max(max_vertex + 1, 1));
  if (n < 1) problems.push_back("graph must have at least one vertex");
  if (max_vertex >= n) {
    problems.push_back("vertex index " + std::to_string(max_vertex) + " >= vertex count " +
                       std::to_string(n));
  }

  std::set<HalfEdge> seen;
  std::set<std::pair<int, int>> vertex_pairs;
  std::map<int, int> deg;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string tag = "edge " + std::to_string(i) + " " + describe(e.a) + "-" + describe(e.b);
    if (e.a.vertex == e.b.vertex) problems.push_back(tag + ": self-loop");
    for (const HalfEdge& h : {e.a, e.b}) {
      if (!seen.insert(h).second) problems.push_back(tag + ": duplicate half-edge " + describe(h));
      if (degree && h.port >= *degree) {
        problems.push_back(tag + ": port " + std::to_string(h.port) + " >= degree " +
                           std::to_string(*degree));
      }
    }
    if (e.a.vertex != e.b.vertex) {
      auto key = std::minmax(e.a.vertex, e.b.vertex);
      if (!vertex_pairs.insert({key.first, key.second}).second) {
        problems.push_back(tag + ": parallel edge between " + std::to_string(key.first) + " and " +
                           std::to_string(key.second));
      }
    }
    ++deg[e.a.vertex];
    ++deg[e.b.vertex];
  }

  int max_degree = 0;
  for (auto [v, k] : deg) max_degree = std::max(max_degree, k);
  const int d = degree.value_or(std::max({max_degree, max_port + 1, 1}));
  if (d < 1) problems.push_back("degree must be >= 1");
  if (degree && max_degree > *degree) {
    problems.push_back("declared degree " + std::to_string(*degree) + " < max vertex degree " +
                       std::to_string(max_degree));
  }
  if (!degree && max_port + 1 > max_degree && max_port >= 0) {
    // Ports must fit in 0..d-1 where d is the maximum vertex degree.
    problems.push_back("port index " + std::to_string(max_port) + " >= graph degree " +
                       std::to_string(max_degree));
  }

  if (!problems.empty()) throw StructuralError(std::move(problems));

  PortGraph g;
  g.num_vertices_ = n;
  g.degree_ = d;
  g.num_edges_ = static_cast<int>(edges.size());
  g.vertex_degrees_.assign(n, 0);
  g.zeta_.assign(static_cast<std::size_t>(n) * d, std::nullopt);
  for (const Edge& e : edges) {
    g.zeta_[e.a.vertex * d + e.a.port] = e.b;
    g.zeta_[e.b.vertex * d + e.b.port] = e.a;
    ++g.vertex_degrees_[e.a.vertex];
    ++g.vertex_degrees_[e.b.vertex];
  }
  for (int v = 0; v < n; ++v) {
    if (g.vertex_degrees_[v] == 0) {
      g.warnings_.push_back("vertex " + std::to_string(v) +
                            " is isolated; a walker starting there never moves");
    }
  }
  return g;
}

int PortGraph::vertex_degree(int vertex) const {
  if (vertex < 0 || vertex >= num_vertices_) {
    throw DomainError("vertex " + std::to_string(vertex) + " out of range");
  }
  return vertex_degrees_[vertex];
}

bool PortGraph::is_regular() const noexcept {
  return std::all_of(vertex_degrees_.begin(), vertex_degrees_.end(),
                     [this](int k) { return k == degree_; });
}

bool PortGraph::is_used(int vertex, int port) const noexcept {
  if (vertex < 0 || vertex >= num_vertices_ || port < 0 || port >= degree_) return false;
  return zeta_[vertex * degree_ + port].has_value();
}

std::vector<int> PortGraph::used_ports(int vertex) const {
  std::vector<int> ports;
  for (int k = 0; k < degree_; ++k) {
    if (is_used(vertex, k)) ports.push_back(k);
  }
  return ports;
}

HalfEdge PortGraph::zeta(int vertex, int port) const {
  if (!is_used(vertex, port)) {
    throw DomainError("port " + describe({vertex, port}) + " is not used by the graph");
  }
  return *zeta_[vertex * degree_ + port];
}

EdgeList PortGraph::to_edge_list() const {
  EdgeList edges;
  for (int v = 0; v < num_vertices_; ++v) {
    for (int k = 0; k < degree_; ++k) {
      const auto& other = zeta_[v * degree_ + k];
      if (other && HalfEdge{v, k} < *other) edges.push_back({{v, k}, *other});
    }
  }
  return edges;
}

bool PortGraph::operator==(const PortGraph& other) const {
  return num_vertices_ == other.num_vertices_ && degree_ == other.degree_ &&
         zeta_ == other.zeta_;
}

PortGraph build_cycle(int n) {
  if (n < 3) {
    throw StructuralError({"cycle needs at least 3 vertices (got " + std::to_string(n) +
                           "); fewer would create a parallel edge or self-loop"});
  }
  EdgeList edges;
  for (int j = 0; j < n; ++j) edges.push_back({{j, 0}, {(j + 1) % n, 1}});
  return PortGraph::from_edge_list(edges, n, 2);
}

EdgeList assign_ports(const std::vector<std::pair<int, int>>& adjacency) {
  std::vector<std::string> problems;
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(adjacency.size());
  for (auto [u, v] : adjacency) {
    if (u == v) problems.push_back("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0) problems.push_back("negative vertex index");
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      problems.push_back("parallel edge between " + std::to_string(sorted[i].first) + " and " +
                         std::to_string(sorted[i].second));
    }
  }
  if (!problems.empty()) throw StructuralError(std::move(problems));

  std::map<int, int> next_port;
  EdgeList edges;
  for (auto [u, v] : sorted) {
    edges.push_back({{u, next_port[u]++}, {v, next_port[v]++}});
  }
  return edges;
}

PortGraph example_general_graph() {
  return PortGraph::from_edge_list(
      assign_ports({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}), 6, 4);
}

}  // namespace qwalk
