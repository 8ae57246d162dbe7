#include "sparse_ramsey/canonical.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sparse_ramsey {

namespace detail {

MaskGraph to_masks(const Graph& g) {
  if (g.order() > kCanonicalCap)
    throw std::invalid_argument("canonical labelling supports at most " + std::to_string(kCanonicalCap) +
                                " vertices");
  MaskGraph m;
  m.n = g.order();
  for (int v = 0; v < m.n; ++v)
    for (int u : g.neighbors(v)) m.rows[v] |= 1U << u;
  return m;
}

namespace {

struct Partition {
  std::array<std::uint32_t, kCanonicalCap> cells{};
  int count = 0;
};

// Splits cells by neighbour counts into splitter cells until the partition
// is equitable. Every choice depends only on cell order, so the result is
// invariant under relabelling.
void refine(const MaskGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int si = 0; si < p.count && !changed; ++si) {
      const std::uint32_t splitter = p.cells[si];
      for (int ci = 0; ci < p.count; ++ci) {
        const std::uint32_t cell = p.cells[ci];
        if (std::has_single_bit(cell)) continue;
        // Bucket members by count; no vertex neighbours itself, so counts
        // stay below 32.
        std::array<std::uint32_t, kCanonicalCap> bucket{};
        std::uint32_t used_counts = 0;
        int distinct = 0;
        for (std::uint32_t m = cell; m; m &= m - 1) {
          int v = std::countr_zero(m);
          int c = std::popcount(g.rows[v] & splitter);
          if (bucket[c] == 0) ++distinct;
          bucket[c] |= 1U << v;
          used_counts |= 1U << c;
        }
        if (distinct == 1) continue;
        // Replace cell ci by its buckets in increasing count order.
        std::array<std::uint32_t, kCanonicalCap> pieces{};
        int np = 0;
        for (std::uint32_t m = used_counts; m; m &= m - 1) pieces[np++] = bucket[std::countr_zero(m)];
        for (int i = p.count - 1; i > ci; --i) p.cells[i + np - 1] = p.cells[i];
        for (int i = 0; i < np; ++i) p.cells[ci + i] = pieces[i];
        p.count += np - 1;
        changed = true;
        break;
      }
    }
  }
}

class Labeller {
 public:
  explicit Labeller(const MaskGraph& g) : g_(g) {}

  void run() {
    Partition root;
    if (g_.n == 0) {
      have_best_ = true;
      return;
    }
    root.cells[0] = g_.n == 32 ? ~0U : (1U << g_.n) - 1;
    root.count = 1;
    std::vector<int> prefix;
    search(root, prefix);
  }

  const std::array<int, kCanonicalCap>& best_labels() const { return best_lab_; }
  const AdjacencyCode& best_code() const { return best_code_; }

 private:
  AdjacencyCode leaf_code(const std::array<int, kCanonicalCap>& inv) const {
    AdjacencyCode code;
    code.n = g_.n;
    int pos = 0;
    for (int i = 0; i < g_.n; ++i) {
      const std::uint32_t row = g_.rows[inv[i]];
      for (int j = i + 1; j < g_.n; ++j, ++pos)
        if ((row >> inv[j]) & 1U) code.words[pos >> 6] |= std::uint64_t{1} << (63 - (pos & 63));
    }
    return code;
  }

  void search(Partition p, std::vector<int>& prefix) {
    refine(g_, p);
    if (p.count == g_.n) {
      std::array<int, kCanonicalCap> lab{};
      std::array<int, kCanonicalCap> inv{};
      for (int i = 0; i < p.count; ++i) {
        int v = std::countr_zero(p.cells[i]);
        lab[v] = i;
        inv[i] = v;
      }
      AdjacencyCode code = leaf_code(inv);
      if (!have_best_ || code > best_code_) {
        have_best_ = true;
        best_code_ = code;
        best_lab_ = lab;
        best_inv_ = inv;
      } else if (code == best_code_) {
        std::array<int, kCanonicalCap> gen{};
        bool identity = true;
        for (int v = 0; v < g_.n; ++v) {
          gen[v] = best_inv_[lab[v]];
          identity = identity && gen[v] == v;
        }
        if (!identity) generators_.push_back(gen);
      }
      return;
    }

    int target = 0;
    while (std::has_single_bit(p.cells[target])) ++target;
    const std::uint32_t cell = p.cells[target];

    std::uint32_t explored_roots = 0;
    for (std::uint32_t m = cell; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (explored_roots != 0) {
        auto root = orbit_roots(prefix);
        bool seen = false;
        for (std::uint32_t e = explored_roots; e; e &= e - 1)
          if (root[std::countr_zero(e)] == root[v]) seen = true;
        if (seen) continue;
      }
      Partition child;
      child.count = p.count + 1;
      for (int i = 0; i < target; ++i) child.cells[i] = p.cells[i];
      child.cells[target] = 1U << v;
      child.cells[target + 1] = cell & ~(1U << v);
      for (int i = target + 1; i < p.count; ++i) child.cells[i + 1] = p.cells[i];
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored_roots |= 1U << v;
    }
  }

  // Orbit representatives under the stored automorphisms that fix every
  // vertex of `prefix`.
  std::array<int, kCanonicalCap> orbit_roots(const std::vector<int>& prefix) const {
    std::array<int, kCanonicalCap> parent{};
    std::iota(parent.begin(), parent.begin() + g_.n, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int v : prefix)
        if (gen[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) {
        int a = find(v);
        int b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::array<int, kCanonicalCap> root{};
    for (int v = 0; v < g_.n; ++v) root[v] = find(v);
    return root;
  }

  const MaskGraph& g_;
  bool have_best_ = false;
  AdjacencyCode best_code_;
  std::array<int, kCanonicalCap> best_lab_{};
  std::array<int, kCanonicalCap> best_inv_{};
  std::vector<std::array<int, kCanonicalCap>> generators_;
};

}  // namespace

std::uint64_t canonical_code(const MaskGraph& g) {
  if (g.n > 11) throw std::invalid_argument("one-word canonical codes need n <= 11");
  Labeller l(g);
  l.run();
  return l.best_code().words[0];
}

MaskGraph decode_masks(std::uint64_t code, int n) {
  if (n < 0 || n > 11) throw std::invalid_argument("one-word codes need 0 <= n <= 11");
  MaskGraph m;
  m.n = n;
  int pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if ((code >> (63 - pos)) & 1U) {
        m.rows[i] |= 1U << j;
        m.rows[j] |= 1U << i;
      }
  return m;
}

}  // namespace detail

CanonicalForm canonical_form(const Graph& g) {
  detail::MaskGraph m = detail::to_masks(g);
  detail::Labeller l(m);
  l.run();
  CanonicalForm out;
  out.labeling.assign(l.best_labels().begin(), l.best_labels().begin() + g.order());
  out.code = l.best_code();
  out.code.n = g.order();
  out.graph = permute(g, out.labeling);
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

std::uint64_t small_code(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("one-word codes need n <= 11");
  std::uint64_t code = 0;
  int pos = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j, ++pos)
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << (63 - pos);
  return code;
}

std::uint64_t canonical_small_code(const Graph& g) { return detail::canonical_code(detail::to_masks(g)); }

Graph decode_small_code(std::uint64_t code, int n) {
  detail::MaskGraph m = detail::decode_masks(code, n);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (std::uint32_t r = m.rows[i]; r; r &= r - 1) {
      int j = std::countr_zero(r);
      if (j > i) g.add_edge(i, j);
    }
  return g;
}

}  // namespace sparse_ramsey
