#pragma once

#include <utility>
#include <vector>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

/// Outcome of a Hall check: either a matching saturating X, or a set
/// S of X whose neighbourhood in Y is smaller than S.
struct HallResult {
  bool saturated = false;
  std::vector<std::pair<int, int>> matching;  // (x, y) pairs
  VertexSet violator;
  VertexSet violator_neighbors;  // N(S) restricted to Y
};

/// Augmenting-path matching from X into Y using only X-Y edges of `host`.
/// On failure the violator is the set of X vertices visited by the last
/// failed augmenting search. X and Y must be disjoint.
HallResult hall_check(const Graph& host, const VertexSet& x, const VertexSet& y);

/// Size of a maximum X-Y matching (same edge restriction).
int maximum_bipartite_matching(const Graph& host, const VertexSet& x, const VertexSet& y);

}  // namespace sparse_ramsey
