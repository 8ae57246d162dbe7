#include "sparse_ramsey/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sparse_ramsey {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kVertexCap)
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                std::to_string(kVertexCap));
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& r : rows_) d = std::max(d, r.size());
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& r : rows_) d = std::min(d, r.size());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  const VertexSet all = g.vertices();
  for (int v = 0; v < n; ++v) {
    VertexSet row = all - g.neighbors(v);
    row.erase(v);
    for (int u : row)
      if (u > v) out.add_edge(v, u);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : keep) {
    check_vertex(g.order(), v);
    label[v] = next++;
  }
  Graph out(next);
  for (int v : keep)
    for (int u : g.neighbors(v) & keep)
      if (u > v) out.add_edge(label[v], label[u]);
  return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& drop) {
  return induced_subgraph(g, g.vertices() - drop);
}

VertexSet reach(const Graph& g, int start, const VertexSet& allowed) {
  VertexSet seen;
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = reach(g, left.first(), left);
    left -= c;
    out.push_back(c);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0, g.vertices()).size() == g.order();
}

int largest_component_size(const Graph& g) {
  int best = 0;
  for (const auto& c : components(g)) best = std::max(best, c.size());
  return best;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

MultiGraph::MultiGraph(int n)
    : n_(n), mult_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      loops_(static_cast<std::size_t>(n), 0) {}

int MultiGraph::multiplicity(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) return loops_[u];
  return mult_[static_cast<std::size_t>(u) * n_ + v];
}

void MultiGraph::add_edge(int u, int v, int count) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (count < 0) throw std::invalid_argument("negative multiplicity");
  if (u == v) {
    add_loop(u, count);
    return;
  }
  mult_[static_cast<std::size_t>(u) * n_ + v] += count;
  mult_[static_cast<std::size_t>(v) * n_ + u] += count;
}

void MultiGraph::add_loop(int v, int count) {
  check_vertex(n_, v);
  if (count < 0) throw std::invalid_argument("negative loop count");
  loops_[v] += count;
}

int MultiGraph::loop_count() const { return std::accumulate(loops_.begin(), loops_.end(), 0); }

int MultiGraph::non_loop_edge_count() const {
  return std::accumulate(mult_.begin(), mult_.end(), 0) / 2;
}

int MultiGraph::edge_count() const { return non_loop_edge_count() + loop_count(); }

bool MultiGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n_; ++u) {
      if (!seen[u] && mult_[static_cast<std::size_t>(v) * n_ + u] > 0) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

}  // namespace sparse_ramsey
