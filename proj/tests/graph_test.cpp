#include <gtest/gtest.h>

#include <random>

#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/graph.hpp"
#include "support.hpp"

using namespace sparse_ramsey;
namespace fam = sparse_ramsey::families;

TEST(VertexSet, RangeAndIteration) {
  VertexSet s = VertexSet::range(70);
  EXPECT_EQ(s.size(), 70);
  EXPECT_TRUE(s.contains(69));
  EXPECT_FALSE(s.contains(70));
  s.erase(0);
  s.erase(64);
  EXPECT_EQ(s.first(), 1);
  EXPECT_EQ(s.next(63), 65);
  int count = 0;
  for (int v : s) {
    EXPECT_NE(v, 64);
    ++count;
  }
  EXPECT_EQ(count, 68);
  EXPECT_EQ(VertexSet::range(128).size(), 128);
  EXPECT_EQ(VertexSet().first(), -1);
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a{1, 2, 3, 100};
  VertexSet b{3, 4, 100};
  EXPECT_EQ((a & b), (VertexSet{3, 100}));
  EXPECT_EQ((a | b).size(), 5);
  EXPECT_EQ((a - b), (VertexSet{1, 2}));
  EXPECT_TRUE((VertexSet{3}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((VertexSet{5}).intersects(a));
}

TEST(Graph, RejectsLoopsAndBadVertices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(129), std::invalid_argument);
  g.add_edge(0, 2);
  g.add_edge(2, 0);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(Graph, ComplementExamples) {
  EXPECT_EQ(complement(fam::complete(3)).size(), 0);
  EXPECT_EQ(complement(complement(fam::path(4))), fam::path(4));
  const Graph two_k4 = fam::disjoint_union(fam::complete(4), fam::complete(4));
  const std::vector<int> parts{4, 4};
  EXPECT_EQ(complement(two_k4), fam::complete_multipartite(parts));
}

TEST(Graph, ComplementIsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Graph g = testing_support::random_graph(n, 0.3, rng);
    const Graph c = complement(g);
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(g.size() + c.size(), n * (n - 1) / 2);
  }
}

TEST(Graph, ComponentsAndConnectivity) {
  const Graph g = fam::disjoint_union(fam::path(3), fam::cycle(4));
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1].size(), 4);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(largest_component_size(g), 4);
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_FALSE(is_bipartite(fam::cycle(5)));
  EXPECT_TRUE(is_connected(Graph(0)));
}

TEST(Graph, InducedSubgraphRelabels) {
  const Graph c6 = fam::cycle(6);
  const Graph h = induced_subgraph(c6, VertexSet{1, 2, 3, 5});
  EXPECT_EQ(h.order(), 4);
  EXPECT_EQ(h.size(), 2);  // 1-2, 2-3
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_TRUE(h.adjacent(1, 2));
  EXPECT_EQ(remove_vertices(c6, VertexSet{0}), fam::path(5));
}

TEST(Graph, PermutePreservesStructure) {
  const Graph p = fam::path(4);
  const std::vector<int> perm{3, 1, 0, 2};
  const Graph q = permute(p, perm);
  EXPECT_TRUE(q.adjacent(3, 1));
  EXPECT_TRUE(q.adjacent(1, 0));
  EXPECT_TRUE(q.adjacent(0, 2));
  EXPECT_EQ(q.size(), 3);
}

TEST(MultiGraph, CountsLoopsOnce) {
  MultiGraph m(3);
  m.add_edge(0, 1, 3);
  m.add_loop(2);
  m.add_edge(2, 2);
  EXPECT_EQ(m.multiplicity(1, 0), 3);
  EXPECT_EQ(m.loops(2), 2);
  EXPECT_EQ(m.edge_count(), 5);
  EXPECT_EQ(m.non_loop_edge_count(), 3);
  EXPECT_FALSE(m.is_connected());
  m.add_edge(1, 2);
  EXPECT_TRUE(m.is_connected());
  EXPECT_THROW(m.add_edge(0, 1, -1), std::invalid_argument);
}
