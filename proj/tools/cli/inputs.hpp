#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey::cli {

struct NamedGraph {
  std::string label;  // the token (or file:line) it came from
  Graph graph;
};

/// Resolves graph arguments: graph6 strings, family specs (path:7,
/// spider:3x2, petersen, ...), gnp:n,p random graphs drawn from `seed`, and
/// @file lists with one such token per line ('#' starts a comment).
/// Throws InputError.
std::vector<NamedGraph> load_graphs(const std::vector<std::string>& tokens, std::uint64_t seed);

}  // namespace sparse_ramsey::cli
