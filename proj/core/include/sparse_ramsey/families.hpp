#pragma once

#include <span>
#include <string>
#include <string_view>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey::families {

// All constructors use vertex counts: path(n) is P_n, star(n) is K_{1,n-1}.

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph complete(int n);
Graph complete_multipartite(std::span<const int> part_sizes);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Centre 0 with `legs` pendant paths of `leg_length` vertices each.
Graph spider(int legs, int leg_length);
/// Path of `handle` vertices with `bristles` leaves on its last vertex.
Graph broom(int handle, int bristles);
Graph petersen();

/// Parses `name:args` family specs (path:7, spider:3x2, multipartite:3,3,3,
/// broom:4x3, petersen). Throws InputError.
Graph from_spec(std::string_view spec);

}  // namespace sparse_ramsey::families
