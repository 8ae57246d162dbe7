#pragma once

// Deliberately naive reference implementations used as independent oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sparse_ramsey/graph.hpp"

namespace testing_support {

using sparse_ramsey::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph graph_from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int pos = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++pos)
      if ((bits >> pos) & 1U) g.add_edge(u, v);
  return g;
}

namespace detail {

inline bool walk(const Graph& g, std::vector<char>& used, int end, int have, int k) {
  if (have == k) return true;
  for (int u = 0; u < g.order(); ++u) {
    if (used[u] || !g.adjacent(end, u)) continue;
    used[u] = 1;
    if (walk(g, used, u, have + 1, k)) return true;
    used[u] = 0;
  }
  return false;
}

inline bool close_cycle(const Graph& g, std::vector<char>& used, int start, int end, int have, int k) {
  if (have == k) return g.adjacent(end, start);
  for (int u = start + 1; u < g.order(); ++u) {
    if (used[u] || !g.adjacent(end, u)) continue;
    used[u] = 1;
    if (close_cycle(g, used, start, u, have + 1, k)) return true;
    used[u] = 0;
  }
  return false;
}

}  // namespace detail

/// Tries every simple walk without repeated vertices.
inline bool brute_has_path(const Graph& g, int k) {
  if (k <= 0) return true;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    used[s] = 1;
    if (detail::walk(g, used, s, 1, k)) return true;
  }
  return false;
}

/// Cycles through their lowest vertex.
inline bool brute_has_cycle(const Graph& g, int k) {
  for (int s = 0; s < g.order(); ++s) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    used[s] = 1;
    if (detail::close_cycle(g, used, s, s, 1, k)) return true;
  }
  return false;
}

inline int brute_longest_path(const Graph& g) {
  int best = 0;
  for (int k = 1; k <= g.order(); ++k)
    if (brute_has_path(g, k)) best = k;
  return best;
}

inline int brute_alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if ((s >> u) & 1U)
        for (int v = u + 1; v < n && ok; ++v)
          if (((s >> v) & 1U) && g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Maximum matching size between xs and ys by trying every assignment.
inline int brute_matching(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys, std::size_t i = 0,
                          std::uint32_t used = 0) {
  if (i == xs.size()) return 0;
  int best = brute_matching(g, xs, ys, i + 1, used);
  for (std::size_t j = 0; j < ys.size(); ++j)
    if (!((used >> j) & 1U) && g.adjacent(xs[i], ys[j]))
      best = std::max(best, 1 + brute_matching(g, xs, ys, i + 1, used | (1U << j)));
  return best;
}

/// Every injective map of pattern vertices into host vertices.
inline bool brute_contains_subgraph(const Graph& host, const Graph& pattern) {
  const int pn = pattern.order();
  const int hn = host.order();
  if (pn > hn) return false;
  std::vector<int> map(static_cast<std::size_t>(pn), -1);
  std::vector<char> used(static_cast<std::size_t>(hn), 0);
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == pn) {
      for (int a = 0; a < pn; ++a)
        for (int b = a + 1; b < pn; ++b)
          if (pattern.adjacent(a, b) && !host.adjacent(map[a], map[b])) return false;
      return true;
    }
    for (int h = 0; h < hn; ++h) {
      if (used[h]) continue;
      used[h] = 1;
      map[x] = h;
      if (self(self, x + 1)) return true;
      used[h] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Isomorphism classes on n <= 6 vertices: walk all labelled graphs and
/// mark each new graph's whole permutation orbit.
inline std::vector<std::uint64_t> brute_class_representatives(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_list;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
  std::vector<int> index(static_cast<std::size_t>(n * n), -1);
  for (int i = 0; i < pairs; ++i) {
    index[pair_list[i].first * n + pair_list[i].second] = i;
    index[pair_list[i].second * n + pair_list[i].first] = i;
  }
  std::vector<char> seen(std::size_t{1} << pairs, 0);
  std::vector<std::uint64_t> reps;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    if (seen[bits]) continue;
    reps.push_back(bits);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint64_t image = 0;
      for (int i = 0; i < pairs; ++i)
        if ((bits >> i) & 1U) image |= std::uint64_t{1} << index[perm[pair_list[i].first] * n + perm[pair_list[i].second]];
      seen[image] = 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return reps;
}

/// Sorted degree sequence plus naive permutation test, for n <= 8.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Longest u-v path vertex counts that exist, by exhaustive walks.
inline bool brute_path_between(const Graph& g, int u, int v, int vertices) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  used[u] = 1;
  auto rec = [&](auto&& self, int end, int have) -> bool {
    if (have == vertices) return end == v;
    if (end == v) return false;
    for (int w = 0; w < g.order(); ++w) {
      if (used[w] || !g.adjacent(end, w)) continue;
      used[w] = 1;
      if (self(self, w, have + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, u, 1);
}

}  // namespace testing_support
