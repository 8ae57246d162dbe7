#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sparse_ramsey/vertex_set.hpp"

namespace sparse_ramsey {

/// Undirected simple graph on vertices 0..n-1 with bit-matrix adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;  // edge count

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int max_degree() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph remove_vertices(const Graph& g, const VertexSet& drop);

/// Vertex sets of connected components, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g);
/// Vertices reachable from `start` inside `allowed` (start must be allowed).
VertexSet reach(const Graph& g, int start, const VertexSet& allowed);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
int largest_component_size(const Graph& g);

/// Relabels vertices so that old vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

/// Undirected multigraph with edge multiplicities and loops.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);

  int order() const { return n_; }
  int multiplicity(int u, int v) const;
  int loops(int v) const { return loops_[v]; }

  void add_edge(int u, int v, int count = 1);
  void add_loop(int v, int count = 1);

  /// Sum of multiplicities plus sum of loop counts.
  int edge_count() const;
  int loop_count() const;
  int non_loop_edge_count() const;
  bool is_connected() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 0;
  std::vector<int> mult_;  // n*n, symmetric
  std::vector<int> loops_;
};

}  // namespace sparse_ramsey
