#pragma once

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

/// Exact independence number; 0 for the graph on no vertices.
int independence_number(const Graph& g);

/// A maximum independent set (lowest-index witness found first).
VertexSet maximum_independent_set(const Graph& g);

}  // namespace sparse_ramsey
