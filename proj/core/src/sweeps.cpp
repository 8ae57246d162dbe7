#include "sparse_ramsey/sweeps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "sparse_ramsey/canonical.hpp"
#include "sparse_ramsey/containment.hpp"
#include "sparse_ramsey/enumeration.hpp"
#include "sparse_ramsey/graph6.hpp"
#include "sparse_ramsey/parallel.hpp"
#include "sparse_ramsey/ramsey.hpp"
#include "sparse_ramsey/structure.hpp"

namespace sparse_ramsey {

namespace {

struct Keyed {
  std::uint64_t key;
  SweepRow row;
};

// Per-shard accumulator; merged in key order so output is independent of
// the thread count.
struct Partial {
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::vector<Keyed> violations;
  std::vector<Keyed> rows;
  bool record_rows = false;

  void check(std::uint64_t key, const Graph& g, std::string params, bool ok, std::string detail) {
    ++instances;
    if (ok && !record_rows) return;
    SweepRow row{to_graph6(g), std::move(params), ok, std::move(detail)};
    if (!ok) violations.push_back({key, row});
    if (record_rows) rows.push_back({key, std::move(row)});
  }
};

std::uint64_t make_key(int n, std::size_t position, int param) {
  return (static_cast<std::uint64_t>(n) << 48) | (static_cast<std::uint64_t>(position) << 12) |
         static_cast<std::uint64_t>(param);
}

void merge(SweepReport& report, std::vector<Partial>& parts) {
  std::vector<Keyed> violations;
  std::vector<Keyed> rows;
  for (auto& p : parts) {
    report.graphs += p.graphs;
    report.instances += p.instances;
    std::move(p.violations.begin(), p.violations.end(), std::back_inserter(violations));
    std::move(p.rows.begin(), p.rows.end(), std::back_inserter(rows));
  }
  auto by_key = [](const Keyed& a, const Keyed& b) { return a.key < b.key; };
  std::stable_sort(violations.begin(), violations.end(), by_key);
  std::stable_sort(rows.begin(), rows.end(), by_key);
  for (auto& v : violations) report.violations.push_back(std::move(v.row));
  for (auto& r : rows) report.rows.push_back(std::move(r.row));
}

// Visits every class on n_lo..n_hi vertices; visit(g, n, position, partial).
template <class Visit>
void atlas_sweep(SweepReport& report, const SweepOptions& options, int n_lo, int n_hi, Visit visit) {
  const int threads = std::max(1, options.threads);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto& codes = canonical_codes(n, {false, threads});
    std::vector<Partial> parts(static_cast<std::size_t>(threads));
    for (auto& p : parts) p.record_rows = options.record_rows;
    run_sharded(threads, [&](Shard shard) {
      Partial& part = parts[shard.index];
      for (std::size_t i = static_cast<std::size_t>(shard.index); i < codes.size();
           i += static_cast<std::size_t>(shard.stride)) {
        ++part.graphs;
        visit(decode_small_code(codes[i], n), n, i, part);
      }
    });
    merge(report, parts);
  }
}

void check_max_n(int max_n) {
  if (max_n < 1 || max_n > kEnumerationCap)
    throw std::out_of_range("sweeps cover 1.." + std::to_string(kEnumerationCap) + " vertices");
}

}  // namespace

SweepReport dichotomy_sweep(const SweepOptions& options, const std::vector<int>& s_values) {
  check_max_n(options.max_n);
  for (int s : s_values)
    if (s < 2) throw std::invalid_argument("dichotomy sweep needs s >= 2");
  SweepReport report;
  report.name = "dichotomy";
  atlas_sweep(report, options, 3, options.max_n, [&](const Graph& g, int n, std::size_t pos, Partial& part) {
    if (!is_connected(g) || is_star(g) || has_cycle_component(g)) return;
    const SparsityProfile prof = profile(g);
    const ReductionTrace trace = dichotomy_reduce(g);
    const int a = trace.a.size();
    const int b = trace.b.size();
    const int t = trace.excess;
    const int e2 = trace.g2.edge_count();
    const int g1 = trace.g1.order();

    std::string why;
    if (e2 != a + b + t)
      why += "e(G2)=" + std::to_string(e2) + " != |A|+|B|+t=" + std::to_string(a + b + t) + "; ";
    if (b > a + 2 * t) why += "|B|=" + std::to_string(b) + " > |A|+2t=" + std::to_string(a + 2 * t) + "; ";
    if (!trace.g2.is_connected()) why += "G2 disconnected; ";
    if (replay(trace) != trace.g2) why += "replay differs from G2; ";
    part.check(make_key(n, pos, 0), g, "trace", why.empty(), why);

    for (std::size_t j = 0; j < s_values.size(); ++j) {
      const int s = s_values[j];
      if (n < s + 1 || prof.max_susp > s) continue;
      const LeafBounds lb = leaf_bounds(prof, s);
      const std::int64_t need = std::max({lb.by_supports, ceil(lb.by_count), std::int64_t{prof.p}});
      std::string d = "leaves=" + std::to_string(prof.leaf_count) + " bound1=" + std::to_string(lb.by_supports) +
                      " bound2=" + to_string(lb.by_count) + " p=" + std::to_string(prof.p);
      bool ok = prof.leaf_count >= need;
      if (g1 > (s - 1) * e2 + 1) {
        ok = false;
        d += " |G1|=" + std::to_string(g1) + " > (s-1)e(G2)+1=" + std::to_string((s - 1) * e2 + 1);
      }
      part.check(make_key(n, pos, static_cast<int>(j) + 1), g, "s=" + std::to_string(s), ok, d);
    }
  });
  return report;
}

SweepReport strucf_sweep(const SweepOptions& options, int k_max) {
  check_max_n(options.max_n);
  if (k_max < 2) throw std::invalid_argument("strucf sweep needs k_max >= 2");
  SweepReport report;
  report.name = "strucf";
  atlas_sweep(report, options, 1, options.max_n, [&](const Graph& f, int n, std::size_t pos, Partial& part) {
    const int lp = longest_path(f);
    const int comp = largest_component_size(f);
    const int delta = f.min_degree();
    for (int k = std::max(2, lp + 1); k <= k_max; ++k) {
      const bool small_parts = comp <= k - 1;
      const bool low_degree = 2 * delta <= k - 2;
      part.check(make_key(n, pos, k), f, "k=" + std::to_string(k), small_parts || low_degree,
                 "largest component " + std::to_string(comp) + ", min degree " + std::to_string(delta));
    }
  });
  return report;
}

SweepReport findpath_sweep(const SweepOptions& options, int s, const std::vector<int>& t_values) {
  if (s < 2) throw std::invalid_argument("findpath sweep needs s >= 2");
  SweepReport report;
  report.name = "findpath";
  const int want = 2 * ((s + 1) / 2) + 1;
  for (std::size_t j = 0; j < t_values.size(); ++j) {
    const int t = t_values[j];
    if (t < 2 * s) throw std::invalid_argument("findpath sweep needs t >= 2s");
    const int n = s + t;
    if (n > std::min(options.max_n, kEnumerationCap)) continue;
    atlas_sweep(report, options, n, n, [&](const Graph& g, int, std::size_t pos, Partial& part) {
      const Graph co = complement(g);
      int co_has = -1;  // lazily computed
      int param = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++param) {
          if (!contains_path_between(g, u, v, t) || contains_path_between(g, u, v, t + 1)) continue;
          if (co_has < 0) co_has = contains_path(co, want) ? 1 : 0;
          part.check(make_key(n, pos, param), g,
                     "t=" + std::to_string(t) + ",u=" + std::to_string(u) + ",v=" + std::to_string(v), co_has == 1,
                     "complement lacks P_" + std::to_string(want));
        }
    });
  }
  return report;
}

SweepReport addedge_sweep(const SweepOptions& options, int max_order, const std::vector<int>& k_values) {
  if (max_order < 1 || max_order > 5) throw std::out_of_range("addedge sweep covers graphs on 1..5 vertices");
  for (int k : k_values)
    if (k < 2) throw std::invalid_argument("addedge sweep needs k >= 2");
  SweepReport report;
  report.name = "addedge";
  std::map<std::pair<std::uint64_t, int>, RamseyCertificate> memo;  // (canonical code, k)
  auto oracle = [&](const Graph& g, int k, int n_max) -> const RamseyCertificate& {
    const auto key = std::make_pair(canonical_small_code(g) ^ (static_cast<std::uint64_t>(g.order()) << 56), k);
    auto it = memo.find(key);
    if (it != memo.end() && (it->second.determined || it->second.orders_searched >= n_max)) return it->second;
    RamseyOptions ro;
    ro.n_max = n_max;
    ro.threads = options.threads;
    ro.allow_order_ten = n_max > kEnumerationCap;
    return memo[key] = ramsey_number(g, Target::path(k), ro);
  };

  Partial part;
  part.record_rows = options.record_rows;
  for (int n = 2; n <= max_order; ++n) {
    const auto& codes = canonical_codes(n);
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const Graph g = decode_small_code(codes[i], n);
      if (!is_connected(g)) continue;
      ++part.graphs;
      int param = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          Graph plus = g;
          plus.add_edge(u, v);
          for (int k : k_values) {
            const RamseyCertificate& base = oracle(g, k, kEnumerationCap);
            std::string params = "k=" + std::to_string(k) + ",e=" + std::to_string(u) + "-" + std::to_string(v);
            if (!base.determined) {
              part.check(make_key(n, i, param++), g, params, false,
                         "r(G,P_k) not determined within " + std::to_string(kEnumerationCap) + " vertices");
              continue;
            }
            const int bound = base.value + k - 1;
            const RamseyCertificate& grown = oracle(plus, k, std::min(bound, kEnumerationOverrideCap));
            const bool ok = grown.determined && grown.value <= bound;
            std::string d = "r(G,P_k)=" + std::to_string(base.value) + " bound=" + std::to_string(bound) +
                            " r(G+e,P_k)" +
                            (grown.determined ? "=" + std::to_string(grown.value)
                                              : ">=" + std::to_string(grown.lower_bound));
            part.check(make_key(n, i, param++), g, params, ok, d);
          }
        }
    }
  }
  std::vector<Partial> parts{std::move(part)};
  merge(report, parts);
  return report;
}

SweepReport erdos_gallai_sweep(const SweepOptions& options, int k_max) {
  check_max_n(options.max_n);
  if (k_max < 2) throw std::invalid_argument("Erdos-Gallai sweep needs k_max >= 2");
  SweepReport report;
  report.name = "erdos-gallai";
  const int threads = std::max(1, options.threads);
  Partial total;
  total.record_rows = options.record_rows;
  for (int n = 1; n <= options.max_n; ++n) {
    const auto& codes = canonical_codes(n, {false, threads});
    // best[k] = (edges, position) of the densest P_k-free class found.
    std::vector<std::vector<std::pair<int, std::size_t>>> best(
        static_cast<std::size_t>(threads), std::vector<std::pair<int, std::size_t>>(k_max + 1, {-1, 0}));
    run_sharded(threads, [&](Shard shard) {
      auto& mine = best[shard.index];
      for (std::size_t i = static_cast<std::size_t>(shard.index); i < codes.size();
           i += static_cast<std::size_t>(shard.stride)) {
        const Graph f = decode_small_code(codes[i], n);
        const int lp = longest_path(f);
        for (int k = std::max(2, lp + 1); k <= k_max; ++k)
          if (f.size() > mine[k].first || (f.size() == mine[k].first && i < mine[k].second))
            mine[k] = {f.size(), i};
      }
    });
    total.graphs += codes.size();
    for (int k = 2; k <= k_max; ++k) {
      std::pair<int, std::size_t> ex{-1, 0};
      for (const auto& b : best)
        if (b[k].first > ex.first || (b[k].first == ex.first && b[k].second < ex.second)) ex = b[k];
      const Graph extremal = decode_small_code(codes[ex.second], n);
      const bool ok = 2 * ex.first <= (k - 2) * n;
      std::string bound = std::to_string((k - 2) * n) + "/2";
      total.check(make_key(n, 0, k), extremal, "n=" + std::to_string(n) + ",k=" + std::to_string(k), ok,
                  "ex=" + std::to_string(ex.first) + " bound=" + bound);
      if (2 * ex.first == (k - 2) * n)
        report.notes.push_back("equality at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                               ": ex=" + std::to_string(ex.first) + ", extremal " + to_graph6(extremal));
    }
  }
  std::vector<Partial> parts{std::move(total)};
  merge(report, parts);
  return report;
}

std::vector<std::string> sweep_names() { return {"dichotomy", "strucf", "findpath", "addedge", "erdos-gallai"}; }

std::vector<SweepReport> run_sweep(const std::string& name, const SweepOptions& options,
                                   const std::vector<int>& s_values) {
  std::vector<SweepReport> out;
  const bool all = name == "all";
  if (all || name == "dichotomy") out.push_back(dichotomy_sweep(options, s_values));
  if (all || name == "strucf") out.push_back(strucf_sweep(options));
  if (all || name == "findpath") out.push_back(findpath_sweep(options));
  if (all || name == "addedge") out.push_back(addedge_sweep(options));
  if (all || name == "erdos-gallai") out.push_back(erdos_gallai_sweep(options));
  if (out.empty()) throw std::invalid_argument("unknown sweep '" + name + "'");
  return out;
}

}  // namespace sparse_ramsey
