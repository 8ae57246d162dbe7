#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparse_ramsey/graph.hpp"
#include "sparse_ramsey/rational.hpp"

namespace sparse_ramsey {

/// (k-1)(n-1)+1, the tree versus clique value.
std::int64_t chvatal(std::int64_t n, std::int64_t k);

/// (chi-1)(n-1)+s_min. Requires chi >= 1, s_min >= 1, n >= s_min.
std::int64_t burr_lower(std::int64_t chi, std::int64_t s_min, std::int64_t n);

struct ChromaticData {
  int chi = 0;
  int s_min = 0;  // smallest colour class over all proper chi-colourings
};

inline constexpr int kChromaticCap = 16;

/// Exact; throws std::invalid_argument above kChromaticCap vertices.
ChromaticData chromatic_data(const Graph& h);

enum class TargetKind { kPath, kCycle };

struct GoodnessPrediction {
  TargetKind target = TargetKind::kPath;
  int n = 0;
  int k = 0;
  std::int64_t value = 0;
  std::int64_t term_path_half = 0;  // n + floor(k/2) - 1
  std::int64_t term_alpha = 0;      // n + k - 2 - alpha' - gamma
  int alpha_prime = 0;
  int gamma = 0;
  bool regime_met = false;
  bool sparsity_met = false;
  bool parity_met = true;
  std::vector<std::string> warnings;
};

/// Path target: value is the max of both terms; regime n >= 3424 k^4,
/// sparsity with constant 144. Requires connected g and k >= 2.
GoodnessPrediction predict_path(const Graph& g, int k);

/// Cycle target: value 2n-1; regime n >= 1833 k^4, sparsity with
/// constant 117; parity_met records whether k is odd. Requires k >= 3.
GoodnessPrediction predict_cycle(const Graph& g, int k);

struct Hypothesis {
  std::string statement;
  bool met = false;
  std::string reason;
};

struct BoundReport {
  std::string name;
  Rational value;
  std::vector<Hypothesis> hypotheses;

  bool all_met() const;
};

/// Named upper/lower bound evaluators. Arguments per name:
///   tree_path     n k C
///   base          n k
///   sparse_path   n k [e]
///   sparse_cycle  n k [e]
///   general_cycle n l k
///   add_edge      r_base k
///   findmatch     m k [n l r_h]
/// Throws std::invalid_argument for an unknown name or wrong arity.
BoundReport evaluate_bound(std::string_view name, std::span<const Rational> args);

std::vector<std::string> bound_names();

}  // namespace sparse_ramsey
