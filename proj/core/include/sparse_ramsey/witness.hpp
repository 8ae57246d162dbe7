#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparse_ramsey/graph.hpp"
#include "sparse_ramsey/target.hpp"

namespace sparse_ramsey {

/// Parameters of the complete multipartite lower-bound host.
/// total = n + k - 3 - alpha_prime - gamma = quotient (k-1) + remainder with
/// 0 < remainder <= k-1; the host has `large_parts` parts of size k-1 and
/// `small_parts` parts of size k-2.
struct GammaParams {
  int n = 0;
  int k = 0;
  int alpha_prime = 0;
  int gamma = 0;
  int total = 0;
  int quotient = 0;
  int remainder = 0;
  int large_parts = 0;  // quotient - k + 2 + remainder
  int small_parts = 0;  // k - 1 - remainder
};

/// Throws InfeasibleConstruction (with the failing inequality) when the
/// decomposition has a negative part count or total < 1.
GammaParams gamma_params(int n, int k, int alpha_prime, int gamma);

enum class Construction { kBurrCliques, kGammaMultipartite };

struct CheckResult {
  bool passed = false;
  std::string method;  // which certificate or search settled it
  std::string detail;
  bool budget_exceeded = false;
};

struct ValidationReport {
  CheckResult red;   // host does not contain the pattern graph
  CheckResult blue;  // complement does not contain the target
  bool passed() const { return red.passed && blue.passed; }
};

struct WitnessColoring {
  Graph host;  // red graph; blue is its complement
  int claimed_bound = 0;  // |host| + 1
  Construction construction = Construction::kGammaMultipartite;
  std::vector<int> params;
  std::vector<int> part_sizes;  // clique sizes or independent part sizes
  std::optional<ValidationReport> validation;
};

WitnessColoring build_gamma(int n, int k, int alpha_prime, int gamma);

/// (chi-1) copies of K_{n-1} plus K_{s_min-1}. Requires chi >= 2,
/// s_min >= 1, n >= 2.
WitnessColoring build_burr_cliques(int chi, int s_min, int n);

inline constexpr std::uint64_t kDefaultWitnessBudget = 50'000'000;

/// Checks red avoidance (host does not contain g) and blue avoidance
/// (complement does not contain the target), structural certificates
/// first and exact search otherwise. Stores and returns the report.
ValidationReport validate_witness(WitnessColoring& w, const Graph& g, const Target& target,
                                  std::uint64_t node_budget = kDefaultWitnessBudget);

std::string to_string(Construction c);

}  // namespace sparse_ramsey
