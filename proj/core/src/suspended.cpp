#include "sparse_ramsey/suspended.hpp"

#include <algorithm>

namespace sparse_ramsey {

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.insert(v);
  return out;
}

VertexSet support_vertices(const Graph& g) {
  VertexSet out;
  for (int leaf : leaves(g)) out.insert(g.neighbors(leaf).first());
  return out;
}

namespace {

bool is_cycle_component(const Graph& g, const VertexSet& comp) {
  if (comp.size() < 3) return false;
  for (int v : comp)
    if (g.degree(v) != 2) return false;
  return true;
}

SuspendedPath walk_cycle(const Graph& g, const VertexSet& comp) {
  SuspendedPath p;
  p.whole_cycle = true;
  int start = comp.first();
  int prev = -1;
  int cur = start;
  do {
    p.vertices.push_back(cur);
    VertexSet nb = g.neighbors(cur);
    if (prev >= 0) nb.erase(prev);
    prev = cur;
    cur = nb.first();
  } while (cur != start);
  return p;
}

}  // namespace

std::vector<SuspendedPath> suspended_paths(const Graph& g) {
  std::vector<SuspendedPath> out;
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) {
      out.push_back({{comp.first()}, false, false});
      continue;
    }
    if (is_cycle_component(g, comp)) {
      out.push_back(walk_cycle(g, comp));
      continue;
    }
    for (int u : comp) {
      if (g.degree(u) == 2) continue;
      for (int w : g.neighbors(u)) {
        SuspendedPath p;
        p.vertices = {u};
        int prev = u;
        int cur = w;
        while (true) {
          if (g.degree(cur) != 2) {
            p.vertices.push_back(cur);
            break;
          }
          p.vertices.push_back(cur);
          VertexSet nb = g.neighbors(cur);
          nb.erase(prev);
          int next = nb.first();
          if (next == u) {
            p.closed = true;
            break;
          }
          prev = cur;
          cur = next;
        }
        // Each path is met from both ends; keep one orientation.
        bool keep = p.closed ? p.vertices[1] < p.vertices.back() : u < p.vertices.back();
        if (keep) out.push_back(std::move(p));
      }
    }
  }
  return out;
}

int max_suspended_path_size(const Graph& g) {
  int best = 0;
  for (const auto& p : suspended_paths(g)) best = std::max(best, p.size());
  return best;
}

bool has_cycle_component(const Graph& g) {
  for (const auto& comp : components(g))
    if (is_cycle_component(g, comp)) return true;
  return false;
}

}  // namespace sparse_ramsey
