#pragma once

#include <cstdint>
#include <vector>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

/// True iff g has a simple path on k vertices. Requires k >= 1.
bool contains_path(const Graph& g, int k);

/// True iff g has a cycle on exactly k vertices. Requires k >= 3.
bool contains_cycle(const Graph& g, int k);

/// True iff g has a u-v path on exactly `vertices` vertices.
bool contains_path_between(const Graph& g, int u, int v, int vertices);

/// Vertex count of a longest path (0 for the empty graph).
int longest_path(const Graph& g);

enum class SearchOutcome { kFound, kNotFound, kBudgetExceeded };

struct EmbeddingResult {
  SearchOutcome outcome = SearchOutcome::kNotFound;
  /// mapping[pattern vertex] = host vertex, filled when found.
  std::vector<int> mapping;
  std::uint64_t nodes = 0;
};

/// Non-induced subgraph embedding search. A budget of 0 means unlimited.
EmbeddingResult find_embedding(const Graph& host, const Graph& pattern, std::uint64_t node_budget = 0);

bool contains_subgraph(const Graph& host, const Graph& pattern);

/// Twin classes: vertices with equal open neighbourhoods, or equal closed
/// neighbourhoods, share a class id. Ids are dense and ordered by first member.
std::vector<int> twin_classes(const Graph& g);

}  // namespace sparse_ramsey
