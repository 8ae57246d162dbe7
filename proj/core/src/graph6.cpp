#include "sparse_ramsey/graph6.hpp"

#include "sparse_ramsey/errors.hpp"

namespace sparse_ramsey {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  auto value_at = [&](std::size_t pos) {
    if (pos >= text.size()) throw InputError("graph6: truncated input", pos);
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw InputError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
    return c - 63;
  };

  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input", 0);

  std::size_t pos = 0;
  int n = value_at(0);
  if (n == 63) {
    if (text.size() > 1 && text[1] == '~')
      throw InputError("graph6: orders above 258047 are not supported", 1);
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    pos = 4;
    if (n <= 62) throw InputError("graph6: non-canonical long length prefix", 1);
  } else {
    pos = 1;
  }
  if (n > kVertexCap)
    throw InputError("graph6: order " + std::to_string(n) + " exceeds vertex cap " +
                         std::to_string(kVertexCap),
                     0);

  const std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (pair_bits + 5) / 6;
  if (text.size() < pos + body)
    throw InputError("graph6: expected " + std::to_string(body) + " adjacency bytes", text.size());
  if (text.size() > pos + body) throw InputError("graph6: trailing bytes", pos + body);

  for (std::size_t b = pos; b < pos + body; ++b) value_at(b);

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int chunk = value_at(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bit % 6 != 0) {
    int chunk = value_at(pos + bit / 6);
    if (chunk & ((1 << (6 - bit % 6)) - 1)) throw InputError("graph6: nonzero padding bits", pos + bit / 6);
  }
  return g;
}

}  // namespace sparse_ramsey
