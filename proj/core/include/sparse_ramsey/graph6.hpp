#pragma once

#include <string>
#include <string_view>

#include "sparse_ramsey/graph.hpp"

namespace sparse_ramsey {

// graph6: N(n) followed by the upper-triangular adjacency bits taken column
// by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte
// with 63 added. Orders up to 62 use one length byte, larger orders the
// four-byte '~' form.

std::string to_graph6(const Graph& g);

/// Throws InputError carrying the offset of the first bad byte.
Graph from_graph6(std::string_view text);

}  // namespace sparse_ramsey
