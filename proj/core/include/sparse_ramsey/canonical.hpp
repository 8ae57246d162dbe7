#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

/// Largest order accepted by the canonical labeller.
inline constexpr int kCanonicalCap = 32;

/// Upper-triangular adjacency bits (row-major over pairs i < j) of a
/// labelled graph, packed most-significant first into 64-bit words.
struct AdjacencyCode {
  std::array<std::uint64_t, 8> words{};
  int n = 0;

  friend bool operator==(const AdjacencyCode&, const AdjacencyCode&) = default;
  friend std::strong_ordering operator<=>(const AdjacencyCode&, const AdjacencyCode&) = default;
};

struct CanonicalForm {
  std::vector<int> labeling;  // labeling[v] = canonical label of vertex v
  AdjacencyCode code;
  Graph graph;                // g relabelled by `labeling`
};

/// Canonical labelling by partition refinement and individualisation with
/// automorphism pruning. Isomorphic graphs get identical codes.
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// For n <= 11 the whole code fits one word.
std::uint64_t small_code(const Graph& g);
std::uint64_t canonical_small_code(const Graph& g);
Graph decode_small_code(std::uint64_t code, int n);

namespace detail {

/// Row-mask graph used on the enumeration hot path (n <= kCanonicalCap).
struct MaskGraph {
  int n = 0;
  std::array<std::uint32_t, kCanonicalCap> rows{};
};

MaskGraph to_masks(const Graph& g);
/// Canonical one-word code of a mask graph with n <= 11.
std::uint64_t canonical_code(const MaskGraph& g);
MaskGraph decode_masks(std::uint64_t code, int n);

}  // namespace detail

}  // namespace sparse_ramsey
