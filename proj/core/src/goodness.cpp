#include "sparse_ramsey/goodness.hpp"

#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "sparse_ramsey/errors.hpp"
#include "sparse_ramsey/structure.hpp"

namespace sparse_ramsey {

std::int64_t chvatal(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("chvatal: n and k must be >= 1");
  return (k - 1) * (n - 1) + 1;
}

std::int64_t burr_lower(std::int64_t chi, std::int64_t s_min, std::int64_t n) {
  if (chi < 1 || s_min < 1 || n < s_min) throw std::invalid_argument("burr_lower: need chi >= 1, 1 <= s_min <= n");
  return (chi - 1) * (n - 1) + s_min;
}

namespace {

// Adjacency masks restricted to at most kChromaticCap vertices.
bool colorable(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int colors) {
  std::vector<int> verts;
  for (std::uint32_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
  if (verts.empty()) return true;
  if (colors <= 0) return false;
  std::vector<int> color(adj.size(), -1);
  std::function<bool(std::size_t, int)> go = [&](std::size_t i, int used) {
    if (i == verts.size()) return true;
    int v = verts[i];
    std::uint32_t blocked = 0;
    for (std::uint32_t m = adj[v] & mask; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (color[u] >= 0) blocked |= 1U << color[u];
    }
    // New colours are interchangeable; only open the next unused one.
    int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (blocked >> c & 1U) continue;
      color[v] = c;
      if (go(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return go(0, 0);
}

}  // namespace

ChromaticData chromatic_data(const Graph& h) {
  const int n = h.order();
  if (n > kChromaticCap)
    throw std::invalid_argument("chromatic_data: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kChromaticCap));
  if (n == 0) return {0, 0};
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : h.neighbors(v)) adj[v] |= 1U << u;
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;

  ChromaticData out;
  out.chi = 1;
  while (!colorable(adj, all, out.chi)) ++out.chi;
  if (out.chi == 1) {
    out.s_min = n;
    return out;
  }
  // Smallest independent I with g - I colourable by chi-1 colours.
  for (int size = 1; size <= n; ++size) {
    std::uint32_t sub = (1U << size) - 1;
    while (sub <= all) {
      bool independent = true;
      for (std::uint32_t m = sub; m && independent; m &= m - 1)
        if (adj[std::countr_zero(m)] & sub) independent = false;
      if (independent && colorable(adj, all & ~sub, out.chi - 1)) {
        out.s_min = size;
        return out;
      }
      // Gosper's hack: next subset with the same popcount.
      std::uint32_t c = sub & -sub;
      std::uint32_t r = sub + c;
      if (r == 0) break;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
  }
  throw std::logic_error("chromatic_data: no minimum colour class found");
}

namespace {

std::int64_t pow4(std::int64_t k) { return k * k * k * k; }

GoodnessPrediction base_prediction(const Graph& g, int k, TargetKind kind) {
  if (!is_connected(g)) throw PremiseError("prediction requires a connected graph");
  GoodnessPrediction p;
  p.target = kind;
  p.n = g.order();
  p.k = k;
  return p;
}

}  // namespace

GoodnessPrediction predict_path(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("predict_path: k must be >= 2");
  GoodnessPrediction p = base_prediction(g, k, TargetKind::kPath);
  p.alpha_prime = alpha_prime(g);
  p.gamma = gamma_term(p.n, k, p.alpha_prime);
  p.term_path_half = p.n + k / 2 - 1;
  p.term_alpha = p.n + k - 2 - p.alpha_prime - p.gamma;
  p.value = std::max(p.term_path_half, p.term_alpha);
  p.regime_met = p.n >= 3424 * pow4(k);
  p.sparsity_met = sparsity_ok(g, k, 144);
  if (!p.regime_met) p.warnings.push_back("n below 3424k^4: value is the formula, not a proven Ramsey number");
  if (!p.sparsity_met) p.warnings.push_back("more than (1+1/(144k^2))n edges");
  return p;
}

GoodnessPrediction predict_cycle(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("predict_cycle: k must be >= 3");
  GoodnessPrediction p = base_prediction(g, k, TargetKind::kCycle);
  p.value = 2 * static_cast<std::int64_t>(p.n) - 1;
  p.parity_met = k % 2 == 1;
  p.regime_met = p.n >= 1833 * pow4(k);
  p.sparsity_met = sparsity_ok(g, k, 117);
  if (!p.parity_met) p.warnings.push_back("even cycle length: 2n-1 is only established for odd k");
  if (!p.regime_met) p.warnings.push_back("n below 1833k^4: value is the formula, not a proven Ramsey number");
  if (!p.sparsity_met) p.warnings.push_back("more than (1+1/(117k^2))n edges");
  return p;
}

bool BoundReport::all_met() const {
  for (const auto& h : hypotheses)
    if (!h.met) return false;
  return true;
}

namespace {

Hypothesis check(std::string statement, bool met, std::string lhs_rhs) {
  return {std::move(statement), met, std::move(lhs_rhs)};
}

Hypothesis at_least(const std::string& what, const Rational& lhs, const Rational& rhs) {
  return check(what + " >= " + to_string(rhs), lhs >= rhs, what + " = " + to_string(lhs));
}

Hypothesis missing(std::string statement) { return {std::move(statement), false, "not supplied"}; }

Hypothesis edge_condition(std::span<const Rational> args, std::size_t at, const Rational& n, const Rational& k,
                          int c) {
  std::string statement = "e <= (1 + 1/(" + std::to_string(c) + "k^2)) n";
  if (args.size() <= at) return missing(statement);
  Rational limit = n + n / (Rational(c) * k * k);
  return check(statement, args[at] <= limit, "e = " + to_string(args[at]) + ", limit " + to_string(limit));
}

std::int64_t whole(const Rational& r, const char* what) {
  if (r.denominator() != 1) throw std::invalid_argument(std::string(what) + " must be an integer");
  return r.numerator();
}

using Evaluator = BoundReport (*)(std::span<const Rational>);

BoundReport tree_path(std::span<const Rational> a) {
  const Rational n = a[0], k = a[1], c = a[2];
  BoundReport r{"tree_path", c * n, {}};
  r.hypotheses.push_back(at_least("k", k, 3));
  r.hypotheses.push_back(check("C > 1", c > 1, "C = " + to_string(c)));
  if (c > 1) {
    r.hypotheses.push_back(at_least("n", n, 2 * c * k / ((c - 1) * (c - 1))));
  } else {
    r.hypotheses.push_back({"n >= 2Ck/(C-1)^2", false, "undefined for C <= 1"});
  }
  return r;
}

BoundReport base(std::span<const Rational> a) {
  const Rational n = a[0], k = a[1];
  BoundReport r{"base", Rational(3, 2) * n, {}};
  r.hypotheses.push_back(at_least("k", k, 3));
  r.hypotheses.push_back(at_least("n", n, 12 * k));
  return r;
}

BoundReport sparse_path(std::span<const Rational> a) {
  const Rational n = a[0], k = a[1];
  BoundReport r{"sparse_path", n + 23 * k * k, {}};
  r.hypotheses.push_back(at_least("k", k, 3));
  r.hypotheses.push_back(at_least("n", n, 12 * k));
  r.hypotheses.push_back(edge_condition(a, 2, n, k, 9));
  return r;
}

BoundReport sparse_cycle(std::span<const Rational> a) {
  const Rational n = a[0], k = a[1];
  BoundReport r{"sparse_cycle", 2 * n + 23 * k * k, {}};
  r.hypotheses.push_back(at_least("k", k, 3));
  r.hypotheses.push_back(at_least("n", n, 12 * k));
  r.hypotheses.push_back(edge_condition(a, 2, n, k, 12));
  return r;
}

BoundReport general_cycle(std::span<const Rational> a) {
  const Rational n = a[0], l = a[1], k = a[2];
  if (n <= 0) throw std::invalid_argument("general_cycle: n must be positive");
  BoundReport r{"general_cycle", n + 2 * l * k - 2 * l / n, {}};
  r.hypotheses.push_back(at_least("k", k, 3));
  r.hypotheses.push_back(at_least("l", l, 0));
  return r;
}

BoundReport add_edge(std::span<const Rational> a) {
  const Rational base_value = a[0], k = a[1];
  BoundReport r{"add_edge", base_value + k - 1, {}};
  r.hypotheses.push_back(at_least("k", k, 2));
  return r;
}

BoundReport findmatch(std::span<const Rational> a) {
  const Rational m = a[0], k = a[1];
  const std::int64_t kk = whole(k, "k");
  BoundReport r{"findmatch", m + kk / 2 - 1, {}};
  r.hypotheses.push_back(at_least("k", k, 3));
  if (a.size() >= 4) {
    const Rational n = a[2], l = a[3];
    bool ok = m >= n && n >= 2 * l && 2 * l >= 1;
    r.hypotheses.push_back(check("m >= n >= 2l >= 1", ok,
                                 "m = " + to_string(m) + ", n = " + to_string(n) + ", l = " + to_string(l)));
  } else {
    r.hypotheses.push_back(missing("m >= n >= 2l >= 1"));
  }
  if (a.size() >= 5) {
    r.hypotheses.push_back(check("r(H,P_k) <= m-2k+2", a[4] <= m - 2 * k + 2,
                                 "r(H,P_k) = " + to_string(a[4]) + ", m-2k+2 = " + to_string(m - 2 * k + 2)));
  } else {
    r.hypotheses.push_back(missing("r(H,P_k) <= m-2k+2"));
  }
  return r;
}

struct Entry {
  Evaluator fn;
  std::size_t min_args;
  std::size_t max_args;
};

const std::map<std::string, Entry, std::less<>>& registry() {
  static const std::map<std::string, Entry, std::less<>> table{
      {"tree_path", {tree_path, 3, 3}},     {"base", {base, 2, 2}},
      {"sparse_path", {sparse_path, 2, 3}}, {"sparse_cycle", {sparse_cycle, 2, 3}},
      {"general_cycle", {general_cycle, 3, 3}}, {"add_edge", {add_edge, 2, 2}},
      {"findmatch", {findmatch, 2, 5}},
  };
  return table;
}

}  // namespace

BoundReport evaluate_bound(std::string_view name, std::span<const Rational> args) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown bound '" + std::string(name) + "'");
  const Entry& e = it->second;
  if (args.size() < e.min_args || args.size() > e.max_args)
    throw std::invalid_argument("bound '" + std::string(name) + "' takes " + std::to_string(e.min_args) + ".." +
                                std::to_string(e.max_args) + " arguments");
  return e.fn(args);
}

std::vector<std::string> bound_names() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : registry()) out.push_back(name);
  return out;
}

}  // namespace sparse_ramsey
