#include "sparse_ramsey/containment.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparse_ramsey {

namespace {

// Size of the part of `avail` reachable from `from` (which must be in avail).
int reachable(const Graph& g, int from, const VertexSet& avail) { return reach(g, from, avail).size(); }

bool extend_path(const Graph& g, int end, VertexSet& visited, int have, int k) {
  if (have == k) return true;
  VertexSet cand = g.neighbors(end) - visited;
  if (cand.empty()) return false;
  VertexSet avail = g.vertices() - visited;
  avail.insert(end);
  if (reachable(g, end, avail) - 1 + have < k) return false;
  for (int u : cand) {
    visited.insert(u);
    if (extend_path(g, u, visited, have + 1, k)) return true;
    visited.erase(u);
  }
  return false;
}

bool extend_cycle(const Graph& g, int root, int end, VertexSet& visited, const VertexSet& allowed, int have,
                  int k) {
  if (have == k) return g.adjacent(end, root);
  VertexSet cand = (g.neighbors(end) & allowed) - visited;
  if (have == k - 1) cand &= g.neighbors(root);
  if (cand.empty()) return false;
  VertexSet avail = allowed - visited;
  avail.insert(end);
  if (reachable(g, end, avail) - 1 + have < k) return false;
  for (int u : cand) {
    visited.insert(u);
    if (extend_cycle(g, root, u, visited, allowed, have + 1, k)) return true;
    visited.erase(u);
  }
  return false;
}

bool extend_between(const Graph& g, int end, int target, VertexSet& visited, int have, int len) {
  if (have == len - 1) return g.adjacent(end, target);
  VertexSet cand = g.neighbors(end) - visited;
  cand.erase(target);
  if (cand.empty()) return false;
  VertexSet avail = g.vertices() - visited;
  avail.insert(end);
  VertexSet r = reach(g, end, avail);
  if (!r.contains(target) || r.size() - 1 + have < len) return false;
  for (int u : cand) {
    visited.insert(u);
    if (extend_between(g, u, target, visited, have + 1, len)) return true;
    visited.erase(u);
  }
  return false;
}

bool longest_from(const Graph& g, int end, VertexSet& visited, int have, int cap, int& best) {
  best = std::max(best, have);
  if (best >= cap) return true;
  VertexSet avail = g.vertices() - visited;
  avail.insert(end);
  if (reachable(g, end, avail) - 1 + have <= best) return false;
  for (int u : g.neighbors(end) - visited) {
    visited.insert(u);
    if (longest_from(g, u, visited, have + 1, cap, best)) return true;
    visited.erase(u);
  }
  return false;
}

}  // namespace

bool contains_path(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("contains_path: k must be >= 1");
  const int n = g.order();
  if (k > n) return false;
  if (k == 1) return true;
  if (k == 2) return g.size() > 0;
  for (const auto& comp : components(g)) {
    if (comp.size() < k) continue;
    // A component that is complete enough to be traceable is found on the
    // first descent; the reach bound prunes the rest.
    for (int s : comp) {
      VertexSet visited;
      visited.insert(s);
      if (extend_path(g, s, visited, 1, k)) return true;
    }
  }
  return false;
}

bool contains_cycle(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("contains_cycle: k must be >= 3");
  const int n = g.order();
  if (k > n || g.size() < k) return false;
  if (k % 2 == 1 && is_bipartite(g)) return false;
  if (k == 3) {
    for (auto [u, v] : g.edges())
      if (!(g.neighbors(u) & g.neighbors(v)).empty()) return true;
    return false;
  }
  for (int root = 0; root + k <= n; ++root) {
    VertexSet allowed = VertexSet::range(n) - VertexSet::range(root + 1);
    if ((g.neighbors(root) & allowed).size() < 2) continue;
    VertexSet visited;
    visited.insert(root);
    allowed.insert(root);
    if (extend_cycle(g, root, root, visited, allowed, 1, k)) return true;
  }
  return false;
}

bool contains_path_between(const Graph& g, int u, int v, int vertices) {
  if (vertices < 1) throw std::invalid_argument("contains_path_between: need >= 1 vertex");
  if (u == v) return vertices == 1;
  if (vertices == 1 || vertices > g.order()) return false;
  VertexSet visited;
  visited.insert(u);
  return extend_between(g, u, v, visited, 1, vertices);
}

int longest_path(const Graph& g) {
  auto comps = components(g);
  std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  int best = 0;
  for (const auto& comp : comps) {
    const int cap = comp.size();
    if (cap <= best) break;
    for (int s : comp) {
      VertexSet visited;
      visited.insert(s);
      if (longest_from(g, s, visited, 1, cap, best)) break;
    }
  }
  return best;
}

std::vector<int> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = next;
    VertexSet open_v = g.neighbors(v);
    VertexSet closed_v = open_v;
    closed_v.insert(v);
    for (int u = v + 1; u < n; ++u) {
      if (cls[u] >= 0) continue;
      if (g.adjacent(u, v)) {
        VertexSet closed_u = g.neighbors(u);
        closed_u.insert(u);
        if (closed_u == closed_v) cls[u] = next;
      } else if (g.neighbors(u) == open_v) {
        cls[u] = next;
      }
    }
    ++next;
  }
  return cls;
}

namespace {

// Backtracking embedding with two symmetry reductions:
//  * host twins: among unused host vertices of one twin class only the
//    lowest is tried (a transposition of twins is a host automorphism that
//    fixes every used vertex);
//  * pattern twins: successive members of a pattern twin class receive
//    non-decreasing host twin-class ids.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, std::uint64_t budget)
      : host_(host), pattern_(pattern), budget_(budget) {}

  EmbeddingResult run() {
    EmbeddingResult result;
    const int pn = pattern_.order();
    if (pn == 0) {
      result.outcome = SearchOutcome::kFound;
      return result;
    }
    if (!quick_feasible()) return result;
    build_order();
    host_class_ = twin_classes(host_);
    mapping_.assign(static_cast<std::size_t>(pn), -1);
    bool found = descend(0);
    result.nodes = nodes_;
    if (found) {
      result.outcome = SearchOutcome::kFound;
      result.mapping = mapping_;
    } else if (exhausted_) {
      result.outcome = SearchOutcome::kBudgetExceeded;
    }
    return result;
  }

 private:
  bool quick_feasible() const {
    if (pattern_.order() > host_.order() || pattern_.size() > host_.size()) return false;
    std::vector<int> hd, pd;
    for (int v = 0; v < host_.order(); ++v) hd.push_back(host_.degree(v));
    for (int v = 0; v < pattern_.order(); ++v) pd.push_back(pattern_.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::sort(pd.rbegin(), pd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i)
      if (pd[i] > hd[i]) return false;
    // Each pattern component must fit inside some host component.
    auto hc = components(host_);
    auto pc = components(pattern_);
    std::vector<int> hs, ps;
    for (auto& c : hc) hs.push_back(c.size());
    for (auto& c : pc) ps.push_back(c.size());
    std::sort(hs.rbegin(), hs.rend());
    std::sort(ps.rbegin(), ps.rend());
    return ps.front() <= hs.front();
  }

  void build_order() {
    const int pn = pattern_.order();
    std::vector<int> pclass = twin_classes(pattern_);
    VertexSet placed;
    std::vector<int> last_of_class(static_cast<std::size_t>(pn), -1);
    for (int step = 0; step < pn; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < pn; ++v) {
        if (placed.contains(v)) continue;
        int links = (pattern_.neighbors(v) & placed).size();
        if (links > best_links || (links == best_links && pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed_nbrs_.push_back((pattern_.neighbors(best) & placed).to_vector());
      twin_prev_.push_back(last_of_class[pclass[best]]);
      last_of_class[pclass[best]] = best;
      placed.insert(best);
    }
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (budget_ != 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    const int x = order_[depth];
    const int need = pattern_.degree(x);
    VertexSet cand = host_.vertices() - used_;
    for (int y : placed_nbrs_[depth]) cand &= host_.neighbors(mapping_[y]);
    const int prev = twin_prev_[depth];
    const int min_class = prev >= 0 ? host_class_[mapping_[prev]] : -1;

    std::vector<char> tried_class;
    for (int h : cand) {
      if (host_.degree(h) < need) continue;
      const int c = host_class_[h];
      if (c < min_class) continue;
      if (static_cast<std::size_t>(c) >= tried_class.size()) tried_class.resize(static_cast<std::size_t>(c) + 1, 0);
      if (tried_class[c]) continue;
      tried_class[c] = 1;
      mapping_[x] = h;
      used_.insert(h);
      if (descend(depth + 1)) return true;
      used_.erase(h);
      mapping_[x] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> order_;
  std::vector<std::vector<int>> placed_nbrs_;
  std::vector<int> twin_prev_;
  std::vector<int> host_class_;
  std::vector<int> mapping_;
  VertexSet used_;
};

}  // namespace

EmbeddingResult find_embedding(const Graph& host, const Graph& pattern, std::uint64_t node_budget) {
  return EmbeddingSearch(host, pattern, node_budget).run();
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_embedding(host, pattern).outcome == SearchOutcome::kFound;
}

}  // namespace sparse_ramsey
