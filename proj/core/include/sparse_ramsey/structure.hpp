#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sparse_ramsey/errors.hpp"
#include "sparse_ramsey/graph.hpp"
#include "sparse_ramsey/rational.hpp"
#include "sparse_ramsey/suspended.hpp"

namespace sparse_ramsey {

struct SparsityProfile {
  int n = 0;
  int e = 0;
  int excess = 0;  // e - n; -1 for trees
  bool connected = false;
  bool is_star = false;
  int leaf_count = 0;
  int p = 0;  // support vertices
  int max_susp = 0;
  bool cycle_component = false;
};

/// K_{1,m} for some m >= 1.
bool is_star(const Graph& g);

SparsityProfile profile(const Graph& g);

/// e(g) <= (1 + 1/(c k^2)) n, evaluated exactly. Requires k >= 2, c > 0.
bool sparsity_ok(const Graph& g, int k, const Rational& c);
/// Same test from the counts alone, for orders beyond the graph cap.
bool sparsity_ok(std::int64_t n, std::int64_t e, int k, const Rational& c);

/// g minus v and its neighbourhood.
Graph without_closed_neighborhood(const Graph& g, int v);

/// min over v of the independence number of g - N[v]; 0 for the empty graph.
int alpha_prime(const Graph& g);

/// 0 if (k-1) divides n+k-3-alpha_prime, else 1.
int gamma_term(int n, int k, int alpha_prime);

/// Thrown by dichotomy_reduce when the input is a cycle.
class DegenerateCycle : public PremiseError {
 public:
  using PremiseError::PremiseError;
};

/// Replace a run of degree-2 vertices between u and v by the edge uv.
struct PathContraction {
  std::vector<int> internal;
  int u = -1;
  int v = -1;
};

/// Replace a cycle through `anchor` whose other vertices have degree 2 by a
/// loop at `anchor`.
struct CycleLoop {
  std::vector<int> cycle;  // the degree-2 vertices, in cycle order
  int anchor = -1;
};

using ReductionStep = std::variant<PathContraction, CycleLoop>;

/// Record of the leaf-removal and path-contraction reduction. All vertex
/// ids refer to the input graph.
struct ReductionTrace {
  Graph input;
  Graph g1;                     // input minus its leaves
  std::vector<int> g1_labels;   // g1 vertex -> input vertex
  VertexSet a;                  // support vertices
  VertexSet b;                  // other g1 vertices of degree >= 3
  VertexSet c;                  // other g1 vertices of degree 2
  std::vector<ReductionStep> steps;
  MultiGraph g2;                // on a | b
  std::vector<int> g2_labels;   // g2 vertex -> input vertex
  int excess = 0;
};

/// Requires a connected non-star graph on at least three vertices that is
/// not a cycle. Contractions are taken lowest-index degree-2 vertex first.
ReductionTrace dichotomy_reduce(const Graph& g);

/// Re-applies the trace's steps to g1 and returns the resulting multigraph
/// (on the same vertex order as trace.g2). Throws if a step is invalid.
MultiGraph replay(const ReductionTrace& trace);

struct LeafBounds {
  std::int64_t by_supports = 0;  // n - (s-1)(2p+3t) - 1
  Rational by_count;             // (n - 3(s-1)t - 1) / (2s-1)
};

/// Requires s >= 2 and n >= s+1.
LeafBounds leaf_bounds(const SparsityProfile& prof, int s);

using EndEdge = std::pair<int, int>;  // (support, leaf)

/// l pairwise disjoint end-edges, one leaf per support vertex taken in
/// increasing support order; nullopt when fewer than l exist.
std::optional<std::vector<EndEdge>> end_edge_matching(const Graph& g, int l);

/// Deletes the leaf of every end-edge; survivors keep their relative order.
Graph remove_matched_leaves(const Graph& g, const std::vector<EndEdge>& matching);

/// Removes the first d internal vertices of `path` and joins the ends of
/// the gap. Requires d < path.internal_count().
Graph shorten_suspended(const Graph& g, const SuspendedPath& path, int d);

/// Subdivides the first edge of `path` with d new vertices (labelled
/// n..n+d-1).
Graph lengthen_suspended(const Graph& g, const SuspendedPath& path, int d);

struct PeelResult {
  VertexSet kept;
  std::vector<int> removed;  // in removal order
  int steps() const { return static_cast<int>(removed.size()); }
};

/// Repeatedly deletes a vertex of maximum degree (lowest index on ties)
/// while that degree is at least `threshold`. Requires threshold > 0.
PeelResult peel_high_degree(const Graph& f, const Rational& threshold);

}  // namespace sparse_ramsey
