#pragma once

#include <vector>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

/// Degree-1 vertices.
VertexSet leaves(const Graph& g);
/// Vertices adjacent to at least one leaf.
VertexSet support_vertices(const Graph& g);

/// A maximal path whose internal vertices all have degree 2.
///
/// Open paths run between vertices of degree != 2. A `closed` path starts at
/// a branch vertex u, runs through degree-2 vertices and its last vertex is
/// again adjacent to u. A `whole_cycle` path is a cycle component listed
/// from its lowest vertex; it is the degenerate case and is flagged so
/// callers can treat it as a premise failure.
struct SuspendedPath {
  std::vector<int> vertices;
  bool closed = false;
  bool whole_cycle = false;

  int size() const { return static_cast<int>(vertices.size()); }
  /// Vertices strictly between the two ends.
  int internal_count() const { return size() >= 2 ? size() - 2 : 0; }
};

std::vector<SuspendedPath> suspended_paths(const Graph& g);
int max_suspended_path_size(const Graph& g);
/// True if some component of g is a cycle.
bool has_cycle_component(const Graph& g);

}  // namespace sparse_ramsey
