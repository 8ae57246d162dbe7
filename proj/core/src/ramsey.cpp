#include "sparse_ramsey/ramsey.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sparse_ramsey/canonical.hpp"
#include "sparse_ramsey/containment.hpp"
#include "sparse_ramsey/enumeration.hpp"
#include "sparse_ramsey/independence.hpp"
#include "sparse_ramsey/parallel.hpp"

namespace sparse_ramsey {

namespace {

enum class Shape { kPath, kCycle, kClique, kOther };

Shape classify(const Graph& p) {
  const int n = p.order();
  const int e = p.size();
  if (n >= 1 && e == n * (n - 1) / 2) return Shape::kClique;
  if (!is_connected(p)) return Shape::kOther;
  if (e == n - 1 && p.max_degree() <= 2) return Shape::kPath;
  if (n >= 3 && e == n && p.max_degree() == 2 && p.min_degree() == 2) return Shape::kCycle;
  return Shape::kOther;
}

// First position (in stream order) of a non-arrowing graph on n vertices,
// or npos.
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t first_non_arrowing(const std::vector<std::uint64_t>& codes, int n, const Graph& g, const Target& target,
                               int threads) {
  std::vector<std::size_t> found(static_cast<std::size_t>(std::max(1, threads)), kNone);
  run_sharded(threads, [&](Shard shard) {
    for (std::size_t i = static_cast<std::size_t>(shard.index); i < codes.size();
         i += static_cast<std::size_t>(shard.stride)) {
      if (!arrows(decode_small_code(codes[i], n), g, target)) {
        found[shard.index] = i;
        return;
      }
    }
  });
  return *std::min_element(found.begin(), found.end());
}

std::vector<std::uint64_t> non_arrowing(const std::vector<std::uint64_t>& codes, int n, const Graph& g,
                                        const Target& target, int threads) {
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(std::max(1, threads)));
  run_sharded(threads, [&](Shard shard) {
    for (std::size_t i = static_cast<std::size_t>(shard.index); i < codes.size();
         i += static_cast<std::size_t>(shard.stride))
      if (!arrows(decode_small_code(codes[i], n), g, target)) parts[shard.index].push_back(codes[i]);
  });
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

int order_cap(bool allow_order_ten) { return allow_order_ten ? kEnumerationOverrideCap : kEnumerationCap; }

}  // namespace

bool contains_pattern(const Graph& host, const Graph& pattern) {
  const int n = pattern.order();
  if (n > host.order()) return false;
  switch (classify(pattern)) {
    case Shape::kClique: return n <= 1 || independence_number(complement(host)) >= n;
    case Shape::kPath: return contains_path(host, n);
    case Shape::kCycle: return contains_cycle(host, n);
    case Shape::kOther: break;
  }
  return contains_subgraph(host, pattern);
}

bool arrows(const Graph& f, const Graph& g, const Target& target) {
  if (contains_pattern(f, g)) return true;
  return contains_target(complement(f), target);
}

std::string to_string(RamseyMethod m) {
  return m == RamseyMethod::kHereditaryExtension ? "hereditary-extension" : "atlas-scan";
}

RamseyCertificate ramsey_number(const Graph& g, const Target& target, const RamseyOptions& options) {
  const int cap = order_cap(options.allow_order_ten);
  if (options.n_max < 1 || options.n_max > cap)
    throw std::out_of_range("oracle N_max must lie in 1.." + std::to_string(cap));
  const int threads = std::max(1, options.threads);

  RamseyCertificate cert;
  cert.pattern = g;
  cert.target = target;
  cert.method = options.method;
  cert.lower_bound = 1;
  cert.lower_witness = Graph(0);

  if (options.method == RamseyMethod::kAtlasScan) {
    if (options.n_max > kEnumerationCap && !options.allow_order_ten)
      throw std::out_of_range("atlas scan beyond 9 vertices needs the override");
    EnumerationOptions eo{options.allow_order_ten, threads};
    for (int n = 1; n <= options.n_max; ++n) {
      const auto& codes = canonical_codes(n, eo);
      const std::size_t hit = first_non_arrowing(codes, n, g, target, threads);
      cert.orders_searched = n;
      cert.graphs_examined += hit == kNone ? codes.size() : hit + 1;
      if (hit == kNone) {
        cert.determined = true;
        cert.value = n;
        return cert;
      }
      cert.lower_bound = n + 1;
      cert.lower_witness = decode_small_code(codes[hit], n);
    }
    return cert;
  }

  std::vector<std::uint64_t> good = {0};  // the graph on zero vertices
  for (int n = 1; n <= options.n_max; ++n) {
    std::vector<std::uint64_t> candidates = extend_by_vertex(good, n - 1, threads);
    cert.orders_searched = n;
    cert.graphs_examined += candidates.size();
    std::vector<std::uint64_t> next = non_arrowing(candidates, n, g, target, threads);
    if (next.empty()) {
      cert.determined = true;
      cert.value = n;
      return cert;
    }
    cert.lower_bound = n + 1;
    cert.lower_witness = decode_small_code(next.front(), n);
    good = std::move(next);
  }
  return cert;
}

CertificateCheck verify_certificate(const RamseyCertificate& cert, int threads) {
  CertificateCheck out;
  const Graph& w = cert.lower_witness;
  if (w.order() != cert.lower_bound - 1) {
    out.detail = "lower witness has " + std::to_string(w.order()) + " vertices, expected " +
                 std::to_string(cert.lower_bound - 1);
    return out;
  }
  const auto red = find_embedding(w, cert.pattern);
  const auto blue = find_embedding(complement(w), cert.target.graph());
  out.witness_ok = red.outcome == SearchOutcome::kNotFound && blue.outcome == SearchOutcome::kNotFound;
  if (!out.witness_ok) {
    out.detail = red.outcome == SearchOutcome::kFound ? "lower witness contains the pattern"
                                                      : "lower witness complement contains the target";
    return out;
  }
  if (!cert.determined || cert.value > kEnumerationCap) {
    out.detail = "lower witness verified";
    return out;
  }
  out.upper_checked = true;
  const auto& codes = canonical_codes(cert.value, {false, threads});
  const std::size_t hit = first_non_arrowing(codes, cert.value, cert.pattern, cert.target, threads);
  out.upper_ok = hit == kNone;
  out.detail = out.upper_ok ? "lower witness and all " + std::to_string(codes.size()) + " classes on " +
                                  std::to_string(cert.value) + " vertices verified"
                            : "class " + std::to_string(hit) + " on " + std::to_string(cert.value) +
                                  " vertices does not arrow";
  return out;
}

TuranResult turan_number(int n, int k) {
  if (n < 1 || n > kEnumerationCap) throw std::out_of_range("turan_number needs 1 <= n <= 9");
  if (k < 2) throw std::invalid_argument("turan_number needs k >= 2");
  TuranResult r;
  r.n = n;
  r.k = k;
  r.value = -1;
  for (std::uint64_t code : canonical_codes(n)) {
    Graph f = decode_small_code(code, n);
    if (f.size() <= r.value) continue;
    if (!contains_path(f, k)) {
      r.value = f.size();
      r.extremal = std::move(f);
    }
  }
  return r;
}

}  // namespace sparse_ramsey
