#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sparse_ramsey/canonical.hpp"
#include "sparse_ramsey/enumeration.hpp"
#include "sparse_ramsey/families.hpp"
#include "support.hpp"

using namespace sparse_ramsey;
namespace fam = sparse_ramsey::families;
namespace ts = testing_support;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(g, perm);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = ts::random_graph(1 + static_cast<int>(rng() % 20), 0.4, rng);
    const CanonicalForm a = canonical_form(g);
    const CanonicalForm b = canonical_form(shuffled(g, rng));
    ASSERT_EQ(a.code, b.code);
    ASSERT_EQ(a.graph, b.graph);
    ASSERT_EQ(permute(g, a.labeling), a.graph);
  }
  EXPECT_TRUE(are_isomorphic(fam::petersen(), shuffled(fam::petersen(), rng)));
}

TEST(Canonical, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph a = ts::random_graph(n, 0.5, rng);
    // Half the time a relabelled copy with one edge toggled.
    Graph b = shuffled(a, rng);
    if (trial % 2 == 0 && n >= 2) {
      Graph c(n);
      for (auto [u, v] : b.edges())
        if (!(u == 0 && v == 1)) c.add_edge(u, v);
      if (!b.adjacent(0, 1)) c.add_edge(0, 1);
      b = c;
    }
    ASSERT_EQ(are_isomorphic(a, b), ts::brute_isomorphic(a, b));
  }
}

TEST(Canonical, RegularGraphsWithLargeAutomorphismGroups) {
  std::mt19937_64 rng(79);
  const Graph k44 = fam::complete_multipartite(std::vector<int>{4, 4});
  EXPECT_EQ(canonical_form(k44).code, canonical_form(shuffled(k44, rng)).code);
  const Graph c8 = fam::cycle(8);
  const Graph two_c4 = fam::disjoint_union(fam::cycle(4), fam::cycle(4));
  EXPECT_FALSE(are_isomorphic(c8, two_c4));
  EXPECT_EQ(canonical_small_code(c8), canonical_small_code(shuffled(c8, rng)));
}

TEST(Canonical, SmallCodeRoundTrip) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = ts::random_graph(static_cast<int>(rng() % 12), 0.5, rng);
    ASSERT_EQ(decode_small_code(small_code(g), g.order()), g);
  }
  EXPECT_THROW(small_code(Graph(12)), std::invalid_argument);
}

TEST(Enumeration, ClassCounts) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(canonical_codes(n).size(), known_class_count(n)) << n;
  EXPECT_EQ(known_class_count(4), 11U);
  EXPECT_EQ(known_class_count(8), 12346U);
  EXPECT_THROW(canonical_codes(0), std::out_of_range);
  EXPECT_THROW(canonical_codes(10), std::out_of_range);
}

TEST(Enumeration, MatchesOrbitMarkingUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> expected;
    for (std::uint64_t bits : ts::brute_class_representatives(n))
      expected.insert(canonical_small_code(ts::graph_from_bits(n, bits)));
    const auto& codes = canonical_codes(n);
    ASSERT_EQ(expected.size(), codes.size()) << n;
    ASSERT_TRUE(std::equal(expected.begin(), expected.end(), codes.begin())) << n;
  }
}

TEST(Enumeration, CodesAreCanonicalAndSorted) {
  const auto& codes = canonical_codes(7);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
  for (std::size_t i = 0; i < codes.size(); i += 37)
    ASSERT_EQ(canonical_small_code(decode_small_code(codes[i], 7)), codes[i]);
}

TEST(Enumeration, ShardsPartitionTheStream) {
  const auto& full = canonical_codes(7);
  for (int stride : {1, 2, 3, 7}) {
    std::vector<std::uint64_t> merged(full.size());
    std::size_t total = 0;
    for (int index = 0; index < stride; ++index) {
      EnumerationStream s = enumerate(7, Shard{index, stride});
      for (std::size_t i = 0; i < s.size(); ++i) merged[s.position(i)] = s.code(i);
      total += s.size();
    }
    ASSERT_EQ(total, full.size());
    ASSERT_EQ(codes_checksum(merged), codes_checksum(full));
  }
}

TEST(Enumeration, ExtensionReproducesNextLevel) {
  const auto& six = canonical_codes(6);
  EXPECT_EQ(extend_by_vertex(six, 6), canonical_codes(7));
  EXPECT_EQ(extend_by_vertex(six, 6, 3), canonical_codes(7));
}
