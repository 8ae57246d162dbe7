#include <gtest/gtest.h>

#include <random>

#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/independence.hpp"
#include "sparse_ramsey/matching.hpp"
#include "support.hpp"

using namespace sparse_ramsey;
namespace fam = sparse_ramsey::families;
namespace ts = testing_support;

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(fam::complete(6)), 1);
  EXPECT_EQ(independence_number(fam::cycle(5)), 2);
  EXPECT_EQ(independence_number(fam::petersen()), 4);
  EXPECT_EQ(independence_number(Graph(0)), 0);
  EXPECT_EQ(independence_number(Graph(7)), 7);
}

TEST(Independence, AgreesWithSubsetBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 18);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = ts::random_graph(n, p, rng);
    const int alpha = independence_number(g);
    ASSERT_EQ(alpha, ts::brute_alpha(g));
    const VertexSet s = maximum_independent_set(g);
    ASSERT_EQ(s.size(), alpha);
    for (int u : s) ASSERT_FALSE(g.neighbors(u).intersects(s));
  }
}

TEST(Hall, Examples) {
  Graph g(2);
  g.add_edge(0, 1);
  HallResult r = hall_check(g, VertexSet{0}, VertexSet{1});
  EXPECT_TRUE(r.saturated);
  ASSERT_EQ(r.matching.size(), 1U);
  EXPECT_EQ(r.matching[0], std::make_pair(0, 1));

  Graph h(3);
  h.add_edge(0, 2);
  h.add_edge(1, 2);
  r = hall_check(h, VertexSet{0, 1}, VertexSet{2});
  EXPECT_FALSE(r.saturated);
  EXPECT_EQ(r.violator, (VertexSet{0, 1}));
  EXPECT_EQ(r.violator_neighbors, (VertexSet{2}));
  EXPECT_THROW(hall_check(h, VertexSet{0, 2}, VertexSet{2}), std::invalid_argument);
}

TEST(Hall, AgreesWithBruteForceMatchingAndViolatorsAreGenuine) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const int nx = 1 + static_cast<int>(rng() % 5);
    const int ny = 1 + static_cast<int>(rng() % 5);
    Graph g(nx + ny);
    std::bernoulli_distribution coin(0.35);
    for (int x = 0; x < nx; ++x)
      for (int y = nx; y < nx + ny; ++y)
        if (coin(rng)) g.add_edge(x, y);
    // Edges inside X must be ignored.
    if (nx >= 2 && coin(rng)) g.add_edge(0, 1);
    VertexSet xs = VertexSet::range(nx);
    VertexSet ys = VertexSet::range(nx + ny) - xs;
    const int best = ts::brute_matching(g, xs.to_vector(), ys.to_vector());
    const HallResult r = hall_check(g, xs, ys);
    ASSERT_EQ(r.saturated, best == nx);
    ASSERT_EQ(maximum_bipartite_matching(g, xs, ys), best);
    if (r.saturated) {
      VertexSet used_x, used_y;
      for (auto [x, y] : r.matching) {
        ASSERT_TRUE(g.adjacent(x, y));
        ASSERT_TRUE(xs.contains(x) && ys.contains(y));
        used_x.insert(x);
        used_y.insert(y);
      }
      ASSERT_EQ(used_x, xs);
      ASSERT_EQ(used_y.size(), nx);
    } else {
      ASSERT_TRUE(r.violator.is_subset_of(xs));
      VertexSet nbrs;
      for (int x : r.violator) nbrs |= g.neighbors(x) & ys;
      ASSERT_EQ(nbrs, r.violator_neighbors);
      ASSERT_LT(nbrs.size(), r.violator.size());
    }
  }
}
