#pragma once

#include <cstdint>
#include <string>

#include "sparse_ramsey/graph.hpp"
#include "sparse_ramsey/target.hpp"

namespace sparse_ramsey {

/// Exact containment of `pattern` in `host`. Paths, cycles and cliques go to
/// their dedicated searches, anything else to the embedding search.
bool contains_pattern(const Graph& host, const Graph& pattern);

/// f contains g, or the complement of f contains the target.
bool arrows(const Graph& f, const Graph& g, const Target& target);

enum class RamseyMethod {
  /// Grows the non-arrowing classes one vertex at a time. Non-arrowing is
  /// inherited by induced subgraphs, so deleting a minimum-degree vertex of
  /// any non-arrowing graph lands in the previous level.
  kHereditaryExtension,
  /// Tests every isomorphism class of each order.
  kAtlasScan,
};

std::string to_string(RamseyMethod m);

struct RamseyOptions {
  int n_max = 9;
  int threads = 1;
  /// Permits n_max = 10.
  bool allow_order_ten = false;
  RamseyMethod method = RamseyMethod::kHereditaryExtension;
};

struct RamseyCertificate {
  Graph pattern;
  Target target;
  bool determined = false;
  int value = 0;        // r(pattern, target) when determined
  int lower_bound = 0;  // r >= lower_bound; equals value when determined
  Graph lower_witness;  // on lower_bound - 1 vertices, arrows() is false
  int orders_searched = 0;
  std::uint64_t graphs_examined = 0;
  RamseyMethod method = RamseyMethod::kHereditaryExtension;
};

/// Smallest N <= n_max such that every graph on N vertices arrows. When no
/// such N exists the certificate is undetermined and carries the best lower
/// bound n_max + 1 with its witness. Throws std::out_of_range when n_max is
/// outside 1..9 (1..10 with the override).
RamseyCertificate ramsey_number(const Graph& g, const Target& target, const RamseyOptions& options = {});

struct CertificateCheck {
  bool witness_ok = false;
  bool upper_checked = false;  // false when value exceeds the atlas
  bool upper_ok = false;
  std::string detail;

  bool passed() const { return witness_ok && (!upper_checked || upper_ok); }
};

/// Re-checks the lower witness with the generic embedding search on both
/// colours and, for determined values within the atlas, re-runs the upper
/// claim as a full atlas scan at N = value.
CertificateCheck verify_certificate(const RamseyCertificate& cert, int threads = 1);

struct TuranResult {
  int n = 0;
  int k = 0;
  int value = 0;  // ex(n, P_k)
  Graph extremal;
};

/// ex(n, P_k) by scanning every class on n vertices. Requires 1 <= n <= 9
/// and k >= 2.
TuranResult turan_number(int n, int k);

}  // namespace sparse_ramsey
