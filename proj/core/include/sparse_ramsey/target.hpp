#pragma once

#include <string>
#include <string_view>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

/// A path, cycle or clique on k vertices, the graph the complement must avoid.
struct Target {
  enum class Kind { kPath, kCycle, kClique };
  Kind kind = Kind::kPath;
  int k = 2;

  static Target path(int k) { return {Kind::kPath, k}; }
  static Target cycle(int k) { return {Kind::kCycle, k}; }
  static Target clique(int k) { return {Kind::kClique, k}; }

  Graph graph() const;
  /// "P:5", "C:5", "K:3".
  std::string to_string() const;
  friend bool operator==(const Target&, const Target&) = default;
};

/// Parses "P:k", "C:k" or "K:k". Throws InputError.
Target parse_target(std::string_view text);

/// Exact containment of the target in g.
bool contains_target(const Graph& g, const Target& t);

}  // namespace sparse_ramsey
