#include "sparse_ramsey/witness.hpp"

#include <string>

#include "sparse_ramsey/containment.hpp"
#include "sparse_ramsey/errors.hpp"
#include "sparse_ramsey/families.hpp"

namespace sparse_ramsey {

GammaParams gamma_params(int n, int k, int alpha_prime, int gamma) {
  if (k < 2) throw InfeasibleConstruction("gamma construction needs k >= 2");
  GammaParams p{n, k, alpha_prime, gamma};
  p.total = n + k - 3 - alpha_prime - gamma;
  if (p.total < 1)
    throw InfeasibleConstruction("n+k-3-alpha'-gamma = " + std::to_string(p.total) + " leaves no host vertices");
  // Remainder taken in 1..k-1 rather than 0..k-2.
  p.remainder = p.total % (k - 1);
  if (p.remainder == 0) p.remainder = k - 1;
  p.quotient = (p.total - p.remainder) / (k - 1);
  p.large_parts = p.quotient - k + 2 + p.remainder;
  p.small_parts = k - 1 - p.remainder;
  if (p.large_parts < 0)
    throw InfeasibleConstruction("decomposition " + std::to_string(p.total) + " = " + std::to_string(p.quotient) +
                                 "(k-1) + " + std::to_string(p.remainder) + " needs q-k+2+rho = " +
                                 std::to_string(p.large_parts) + " parts of size k-1");
  return p;
}

WitnessColoring build_gamma(int n, int k, int alpha_prime, int gamma) {
  GammaParams p = gamma_params(n, k, alpha_prime, gamma);
  WitnessColoring w;
  w.construction = Construction::kGammaMultipartite;
  w.part_sizes.assign(static_cast<std::size_t>(p.large_parts), k - 1);
  w.part_sizes.insert(w.part_sizes.end(), static_cast<std::size_t>(p.small_parts), k - 2);
  std::erase(w.part_sizes, 0);
  if (p.total > kVertexCap) throw InfeasibleConstruction("gamma host exceeds the vertex cap");
  w.host = families::complete_multipartite(w.part_sizes);
  w.claimed_bound = w.host.order() + 1;
  w.params = {n, k, alpha_prime, gamma, p.quotient, p.remainder};
  return w;
}

WitnessColoring build_burr_cliques(int chi, int s_min, int n) {
  if (chi < 2 || s_min < 1 || n < 2)
    throw InfeasibleConstruction("burr construction needs chi >= 2, s_min >= 1, n >= 2");
  const int order = (chi - 1) * (n - 1) + s_min - 1;
  if (order > kVertexCap) throw InfeasibleConstruction("burr host exceeds the vertex cap");
  WitnessColoring w;
  w.construction = Construction::kBurrCliques;
  w.part_sizes.assign(static_cast<std::size_t>(chi - 1), n - 1);
  if (s_min > 1) w.part_sizes.push_back(s_min - 1);
  Graph host(0);
  for (int size : w.part_sizes) host = families::disjoint_union(host, families::complete(size));
  w.host = host;
  w.claimed_bound = order + 1;
  w.params = {chi, s_min, n};
  return w;
}

namespace {

CheckResult red_check(const Graph& host, const Graph& g, std::uint64_t budget) {
  if (g.order() > host.order())
    return {true, "order", std::to_string(g.order()) + " > " + std::to_string(host.order()) + " vertices"};
  if (g.size() > host.size())
    return {true, "edge count", std::to_string(g.size()) + " > " + std::to_string(host.size()) + " edges"};
  if (g.max_degree() > host.max_degree())
    return {true, "max degree",
            std::to_string(g.max_degree()) + " > " + std::to_string(host.max_degree())};
  if (is_connected(g) && largest_component_size(host) < g.order())
    return {true, "component size",
            "host components have at most " + std::to_string(largest_component_size(host)) + " vertices"};
  EmbeddingResult r = find_embedding(host, g, budget);
  switch (r.outcome) {
    case SearchOutcome::kNotFound:
      return {true, "exact search", std::to_string(r.nodes) + " nodes"};
    case SearchOutcome::kFound: return {false, "exact search", "host contains the pattern"};
    case SearchOutcome::kBudgetExceeded:
      return {false, "exact search", "node budget of " + std::to_string(budget) + " exhausted", true};
  }
  return {};
}

CheckResult blue_check(const Graph& blue, const Target& t) {
  if (t.kind != Target::Kind::kClique) {
    int largest = largest_component_size(blue);
    if (largest < t.k)
      return {true, "component size", "complement components have at most " + std::to_string(largest) + " vertices"};
  }
  if (t.kind == Target::Kind::kCycle && t.k % 2 == 1 && is_bipartite(blue))
    return {true, "bipartite", "complement is bipartite and the cycle is odd"};
  if (contains_target(blue, t)) return {false, "exact search", "complement contains " + t.to_string()};
  return {true, "exact search", "complement avoids " + t.to_string()};
}

}  // namespace

ValidationReport validate_witness(WitnessColoring& w, const Graph& g, const Target& target,
                                  std::uint64_t node_budget) {
  ValidationReport report;
  report.red = red_check(w.host, g, node_budget);
  report.blue = blue_check(complement(w.host), target);
  w.validation = report;
  return report;
}

std::string to_string(Construction c) {
  return c == Construction::kBurrCliques ? "burr_cliques" : "gamma_multipartite";
}

}  // namespace sparse_ramsey
