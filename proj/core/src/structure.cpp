#include "sparse_ramsey/structure.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sparse_ramsey/independence.hpp"

namespace sparse_ramsey {

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

SparsityProfile profile(const Graph& g) {
  SparsityProfile p;
  p.n = g.order();
  p.e = g.size();
  p.excess = p.e - p.n;
  p.connected = is_connected(g);
  p.is_star = is_star(g);
  p.leaf_count = leaves(g).size();
  p.p = support_vertices(g).size();
  p.max_susp = max_suspended_path_size(g);
  p.cycle_component = has_cycle_component(g);
  return p;
}

bool sparsity_ok(const Graph& g, int k, const Rational& c) { return sparsity_ok(g.order(), g.size(), k, c); }

bool sparsity_ok(std::int64_t n_count, std::int64_t e, int k, const Rational& c) {
  if (n_count < 0 || e < 0) throw std::invalid_argument("sparsity_ok: counts must be non-negative");
  if (k < 2) throw std::invalid_argument("sparsity_ok: k must be >= 2");
  if (c <= 0) throw std::invalid_argument("sparsity_ok: c must be positive");
  const Rational n = n_count;
  return Rational(e) <= n + n / (c * k * k);
}

Graph without_closed_neighborhood(const Graph& g, int v) {
  VertexSet drop = g.neighbors(v);
  drop.insert(v);
  return remove_vertices(g, drop);
}

int alpha_prime(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order() && best > 0; ++v)
    best = std::min(best, independence_number(without_closed_neighborhood(g, v)));
  return best;
}

int gamma_term(int n, int k, int alpha_prime) {
  if (k < 2) throw std::invalid_argument("gamma_term: k must be >= 2");
  const int x = n + k - 3 - alpha_prime;
  return ((x % (k - 1)) + (k - 1)) % (k - 1) == 0 ? 0 : 1;
}

ReductionTrace dichotomy_reduce(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw PremiseError("dichotomy_reduce: needs at least 3 vertices");
  if (!is_connected(g)) throw PremiseError("dichotomy_reduce: graph is disconnected");
  if (is_star(g)) throw PremiseError("dichotomy_reduce: graph is a star");
  if (has_cycle_component(g)) throw DegenerateCycle("dichotomy_reduce: graph is a cycle");

  ReductionTrace t;
  t.input = g;
  t.excess = g.size() - n;
  const VertexSet leaf = leaves(g);
  t.a = support_vertices(g);
  const VertexSet kept = g.vertices() - leaf;
  for (int v : kept - t.a) {
    // Non-support, non-leaf vertices keep their whole neighbourhood in g1.
    if (g.degree(v) >= 3) {
      t.b.insert(v);
    } else {
      t.c.insert(v);
    }
  }
  t.g1 = induced_subgraph(g, kept);
  t.g1_labels = kept.to_vector();

  VertexSet pending = t.c;
  while (!pending.empty()) {
    const int start = pending.first();
    // Grow the run of degree-2 vertices through `start` in both directions.
    std::vector<int> run{start};
    VertexSet in_run{start};
    int ends[2] = {-1, -1};
    for (int side = 0; side < 2; ++side) {
      int cur = start;
      VertexSet nb = g.neighbors(start);
      int step = side == 0 ? nb.first() : nb.next(nb.first());
      while (true) {
        if (!t.c.contains(step)) {
          ends[side] = step;
          break;
        }
        if (in_run.contains(step)) throw DegenerateCycle("dichotomy_reduce: cycle of degree-2 vertices");
        in_run.insert(step);
        if (side == 0) {
          run.insert(run.begin(), step);
        } else {
          run.push_back(step);
        }
        VertexSet next = g.neighbors(step);
        next.erase(cur);
        cur = step;
        step = next.first();
      }
    }
    int u = ends[0];
    int v = ends[1];
    if (run.front() > run.back()) {
      std::reverse(run.begin(), run.end());
      std::swap(u, v);
    }
    if (u == v) {
      t.steps.emplace_back(CycleLoop{run, u});
    } else {
      t.steps.emplace_back(PathContraction{run, u, v});
    }
    pending -= in_run;
  }

  const VertexSet core = t.a | t.b;
  t.g2_labels = core.to_vector();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < t.g2_labels.size(); ++i) pos[t.g2_labels[i]] = static_cast<int>(i);
  t.g2 = MultiGraph(static_cast<int>(t.g2_labels.size()));
  for (int x : core)
    for (int y : g.neighbors(x) & core)
      if (y > x) t.g2.add_edge(pos[x], pos[y]);
  for (const auto& step : t.steps) {
    if (const auto* pc = std::get_if<PathContraction>(&step)) {
      t.g2.add_edge(pos[pc->u], pos[pc->v]);
    } else {
      t.g2.add_loop(pos[std::get<CycleLoop>(step).anchor]);
    }
  }
  return t;
}

MultiGraph replay(const ReductionTrace& trace) {
  // Work on input labels, then compress to the g2 vertex order.
  const int n = trace.input.order();
  MultiGraph work(n);
  VertexSet alive;
  for (std::size_t i = 0; i < trace.g1_labels.size(); ++i) alive.insert(trace.g1_labels[i]);
  for (auto [x, y] : trace.g1.edges()) work.add_edge(trace.g1_labels[x], trace.g1_labels[y]);

  auto fail = [](const std::string& why) { throw std::logic_error("replay: " + why); };
  auto degree = [&](int v) {
    int d = 2 * work.loops(v);
    for (int u : alive)
      if (u != v) d += work.multiplicity(v, u);
    return d;
  };
  auto consume = [&](const std::vector<int>& run, int u, int v) {
    if (run.empty()) fail("empty run");
    int prev = u;
    for (int x : run) {
      if (!alive.contains(x)) fail("vertex " + std::to_string(x) + " already removed");
      if (degree(x) != 2) fail("vertex " + std::to_string(x) + " does not have degree 2");
      if (work.multiplicity(prev, x) < 1) fail("run is not a path");
      prev = x;
    }
    if (work.multiplicity(prev, v) < 1) fail("run does not reach its end vertex");
    for (int x : run) alive.erase(x);
  };

  MultiGraph out(static_cast<int>(trace.g2_labels.size()));
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < trace.g2_labels.size(); ++i) pos[trace.g2_labels[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> added;
  for (const auto& step : trace.steps) {
    if (const auto* pc = std::get_if<PathContraction>(&step)) {
      consume(pc->internal, pc->u, pc->v);
      added.emplace_back(pc->u, pc->v);
    } else {
      const auto& cl = std::get<CycleLoop>(step);
      consume(cl.cycle, cl.anchor, cl.anchor);
      added.emplace_back(cl.anchor, cl.anchor);
    }
  }
  for (int x : alive) {
    if (pos[x] < 0) fail("vertex " + std::to_string(x) + " survives but is not in A or B");
    for (int y : alive)
      if (y > x && work.multiplicity(x, y) > 0) out.add_edge(pos[x], pos[y], work.multiplicity(x, y));
  }
  for (auto [x, y] : added) out.add_edge(pos[x], pos[y]);
  return out;
}

LeafBounds leaf_bounds(const SparsityProfile& prof, int s) {
  if (s < 2) throw std::invalid_argument("leaf_bounds: s must be >= 2");
  if (prof.n < s + 1) throw std::invalid_argument("leaf_bounds: needs n >= s+1");
  const std::int64_t n = prof.n;
  const std::int64_t t = prof.excess;
  const std::int64_t p = prof.p;
  LeafBounds b;
  b.by_supports = n - (s - 1) * (2 * p + 3 * t) - 1;
  b.by_count = Rational(n - 3 * (s - 1) * t - 1, 2 * s - 1);
  return b;
}

std::optional<std::vector<EndEdge>> end_edge_matching(const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("end_edge_matching: l must be >= 1");
  std::vector<EndEdge> out;
  VertexSet used;
  const VertexSet leaf = leaves(g);
  for (int s : support_vertices(g)) {
    if (used.contains(s)) continue;
    VertexSet options = (g.neighbors(s) & leaf) - used;
    if (options.empty()) continue;
    int l_vertex = options.first();
    used.insert(s);
    used.insert(l_vertex);
    out.emplace_back(s, l_vertex);
    if (static_cast<int>(out.size()) == l) return out;
  }
  return std::nullopt;
}

Graph remove_matched_leaves(const Graph& g, const std::vector<EndEdge>& matching) {
  VertexSet touched;
  VertexSet drop;
  for (auto [s, l] : matching) {
    if (s < 0 || l < 0 || s >= g.order() || l >= g.order() || !g.adjacent(s, l))
      throw std::invalid_argument("remove_matched_leaves: (" + std::to_string(s) + "," + std::to_string(l) +
                                  ") is not an edge");
    if (g.degree(l) != 1)
      throw std::invalid_argument("remove_matched_leaves: vertex " + std::to_string(l) + " is not a leaf");
    if (touched.contains(s) || touched.contains(l))
      throw std::invalid_argument("remove_matched_leaves: end-edges are not disjoint");
    touched.insert(s);
    touched.insert(l);
    drop.insert(l);
  }
  return remove_vertices(g, drop);
}

namespace {

void check_suspended(const Graph& g, const SuspendedPath& path) {
  const auto& vs = path.vertices;
  if (vs.size() < 2) throw std::invalid_argument("suspended path needs at least two vertices");
  VertexSet seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int v = vs[i];
    if (v < 0 || v >= g.order() || seen.contains(v))
      throw std::invalid_argument("suspended path has an invalid or repeated vertex");
    seen.insert(v);
    if (i > 0 && !g.adjacent(vs[i - 1], v)) throw std::invalid_argument("suspended path is not a path in g");
    if (i > 0 && i + 1 < vs.size() && g.degree(v) != 2)
      throw std::invalid_argument("internal vertex " + std::to_string(v) + " does not have degree 2");
  }
  if ((path.closed || path.whole_cycle) && !g.adjacent(vs.front(), vs.back()))
    throw std::invalid_argument("closed suspended path does not return to its start");
}

}  // namespace

Graph shorten_suspended(const Graph& g, const SuspendedPath& path, int d) {
  check_suspended(g, path);
  if (d < 0 || d >= path.internal_count())
    throw std::invalid_argument("shorten_suspended: need 0 <= d < internal vertex count");
  if (d == 0) return g;
  Graph h = g;
  const auto& vs = path.vertices;
  VertexSet drop;
  for (int i = 1; i <= d; ++i) drop.insert(vs[i]);
  h.add_edge(vs[0], vs[d + 1]);
  return remove_vertices(h, drop);
}

Graph lengthen_suspended(const Graph& g, const SuspendedPath& path, int d) {
  check_suspended(g, path);
  if (d < 0) throw std::invalid_argument("lengthen_suspended: d must be non-negative");
  if (g.order() + d > kVertexCap) throw std::invalid_argument("lengthen_suspended: vertex cap exceeded");
  if (d == 0) return g;
  const int n = g.order();
  Graph h(n + d);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  const int a = path.vertices[0];
  const int b = path.vertices[1];
  h.remove_edge(a, b);
  int prev = a;
  for (int i = 0; i < d; ++i) {
    h.add_edge(prev, n + i);
    prev = n + i;
  }
  h.add_edge(prev, b);
  return h;
}

PeelResult peel_high_degree(const Graph& f, const Rational& threshold) {
  if (threshold <= 0) throw std::invalid_argument("peel_high_degree: threshold must be positive");
  PeelResult r;
  r.kept = f.vertices();
  while (true) {
    int best = -1;
    int best_deg = -1;
    for (int v : r.kept) {
      int d = (f.neighbors(v) & r.kept).size();
      if (d > best_deg) {
        best = v;
        best_deg = d;
      }
    }
    if (best < 0 || Rational(best_deg) < threshold) break;
    r.kept.erase(best);
    r.removed.push_back(best);
  }
  return r;
}

}  // namespace sparse_ramsey
