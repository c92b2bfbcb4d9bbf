#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qwalk/graph.hpp"

using namespace qwalk;

namespace {

void expect_involution(const PortGraph& g) {
  int used = 0;
  for (int j = 0; j < g.num_vertices(); ++j) {
    for (int k = 0; k < g.degree(); ++k) {
      if (!g.is_used(j, k)) continue;
      ++used;
      const HalfEdge other = g.zeta(j, k);
      EXPECT_NE(other.vertex, j);
      EXPECT_EQ(g.zeta(other), (HalfEdge{j, k}));
    }
  }
  EXPECT_EQ(used, 2 * g.num_edges());
  int degree_sum = 0;
  for (int j = 0; j < g.num_vertices(); ++j) degree_sum += g.vertex_degree(j);
  EXPECT_EQ(used, degree_sum);
}

}  // namespace

TEST(Graph, CycleOfSeven) {
  const PortGraph g = build_cycle(7);
  EXPECT_EQ(g.num_vertices(), 7);
  EXPECT_EQ(g.num_edges(), 7);
  EXPECT_EQ(g.degree(), 2);
  EXPECT_TRUE(g.is_regular());
  for (int j = 0; j < 7; ++j) {
    EXPECT_EQ(g.zeta(j, 0), (HalfEdge{(j + 1) % 7, 1}));
    EXPECT_EQ(g.zeta(j, 1), (HalfEdge{(j + 6) % 7, 0}));
  }
}

TEST(Graph, CycleOfThreeZeta) {
  const PortGraph g = build_cycle(3);
  EXPECT_EQ(g.zeta(0, 0), (HalfEdge{1, 1}));
  EXPECT_EQ(g.zeta(1, 1), (HalfEdge{0, 0}));
}

TEST(Graph, CycleTooSmall) {
  EXPECT_THROW(build_cycle(2), StructuralError);
  EXPECT_THROW(build_cycle(0), StructuralError);
}

TEST(Graph, InvolutionExhaustive) {
  for (int n = 3; n <= 12; ++n) expect_involution(build_cycle(n));
  expect_involution(example_general_graph());
}

TEST(Graph, ExampleGeneralGraph) {
  const PortGraph g = example_general_graph();
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 8);
  EXPECT_EQ(g.degree(), 4);
  EXPECT_FALSE(g.is_regular());
  EXPECT_EQ(g.vertex_degree(0), 4);
  EXPECT_EQ(g.vertex_degree(5), 1);
  EXPECT_TRUE(g.warnings().empty());
}

TEST(Graph, SingleEdge) {
  const PortGraph g = PortGraph::from_edge_list({{{0, 0}, {1, 0}}});
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.degree(), 1);
  EXPECT_EQ(g.zeta(0, 0), (HalfEdge{1, 0}));
}

TEST(Graph, SelfLoopRejected) {
  try {
    PortGraph::from_edge_list({{{0, 0}, {0, 1}}});
    FAIL() << "expected StructuralError";
  } catch (const StructuralError& e) {
    ASSERT_EQ(e.problems().size(), 1u);
    EXPECT_NE(e.problems()[0].find("self-loop"), std::string::npos);
  }
}

TEST(Graph, EveryViolationReported) {
  // duplicate half-edge (0,0), parallel 0-1, port beyond declared degree
  const EdgeList edges{{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}, {{0, 1}, {1, 1}}, {{2, 1}, {3, 5}}};
  try {
    PortGraph::from_edge_list(edges, 4, 2);
    FAIL() << "expected StructuralError";
  } catch (const StructuralError& e) {
    const auto& p = e.problems();
    auto has = [&](const char* word) {
      return std::any_of(p.begin(), p.end(),
                         [&](const std::string& s) { return s.find(word) != std::string::npos; });
    };
    EXPECT_TRUE(has("duplicate"));
    EXPECT_TRUE(has("parallel"));
    EXPECT_TRUE(has("port 5 >= degree 2"));
  }
}

TEST(Graph, PortBeyondInferredDegree) {
  EXPECT_THROW(PortGraph::from_edge_list({{{0, 0}, {1, 3}}}), StructuralError);
}

TEST(Graph, UnusedPortQueryIsAnError) {
  const PortGraph g = example_general_graph();
  EXPECT_FALSE(g.is_used(5, 1));
  EXPECT_THROW(g.zeta(5, 1), DomainError);
  EXPECT_THROW(g.zeta(9, 0), DomainError);
}

TEST(Graph, IsolatedVertexWarns) {
  const PortGraph g = PortGraph::from_edge_list({{{0, 0}, {1, 0}}}, 3, 1);
  ASSERT_EQ(g.warnings().size(), 1u);
  EXPECT_NE(g.warnings()[0].find("vertex 2"), std::string::npos);
}

TEST(AssignPorts, Triangle) {
  const EdgeList e = assign_ports({{1, 2}, {0, 2}, {0, 1}});
  const EdgeList expected{{{0, 0}, {1, 0}}, {{0, 1}, {2, 0}}, {{1, 1}, {2, 1}}};
  EXPECT_EQ(e, expected);
}

TEST(AssignPorts, Path) {
  const PortGraph g = PortGraph::from_edge_list(assign_ports({{0, 1}, {1, 2}}));
  EXPECT_EQ(g.zeta(1, 0).vertex, 0);
  EXPECT_EQ(g.zeta(1, 1).vertex, 2);
}

TEST(AssignPorts, CycleMatchesBuiltInUpToRelabeling) {
  const int n = 5;
  std::vector<std::pair<int, int>> adj;
  for (int j = 0; j < n; ++j) adj.emplace_back(j, (j + 1) % n);
  const PortGraph assigned = PortGraph::from_edge_list(assign_ports(adj));
  const PortGraph cycle = build_cycle(n);
  // Same vertex adjacency, whatever the port labels.
  for (int j = 0; j < n; ++j) {
    std::set<int> a, b;
    for (int k : assigned.used_ports(j)) a.insert(assigned.zeta(j, k).vertex);
    for (int k : cycle.used_ports(j)) b.insert(cycle.zeta(j, k).vertex);
    EXPECT_EQ(a, b);
  }
  EXPECT_EQ(PortGraph::from_edge_list(assigned.to_edge_list()), assigned);
}

TEST(AssignPorts, NonSimpleRejected) {
  EXPECT_THROW(assign_ports({{0, 1}, {1, 0}}), StructuralError);
  EXPECT_THROW(assign_ports({{2, 2}}), StructuralError);
}

TEST(AssignPorts, Deterministic) {
  const std::vector<std::pair<int, int>> adj{{3, 1}, {0, 2}, {2, 3}, {1, 0}};
  EXPECT_EQ(assign_ports(adj), assign_ports(adj));
}

TEST(Graph, EdgeListRoundTrip) {
  for (const PortGraph& g : {build_cycle(4), build_cycle(9), example_general_graph()}) {
    EXPECT_EQ(PortGraph::from_edge_list(g.to_edge_list(), g.num_vertices(), g.degree()), g);
  }
}
