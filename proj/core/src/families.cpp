#include "sparse_ramsey/families.hpp"

#include <charconv>
#include <numeric>
#include <vector>

#include "sparse_ramsey/errors.hpp"

namespace sparse_ramsey::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
  require(n >= 1, "path needs at least one vertex");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(int n) {
  require(n >= 1, "star needs at least one vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete(int n) {
  require(n >= 0, "negative order");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    require(s >= 0, "negative part size");
    n += s;
  }
  std::vector<int> part;
  part.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < part_sizes.size(); ++i) part.insert(part.end(), part_sizes[i], static_cast<int>(i));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  Graph g(shift + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

Graph spider(int legs, int leg_length) {
  require(legs >= 0 && leg_length >= 1, "spider needs legs >= 0 and leg length >= 1");
  Graph g(1 + legs * leg_length);
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int i = 0; i < leg_length; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph broom(int handle, int bristles) {
  require(handle >= 1 && bristles >= 0, "broom needs handle >= 1 and bristles >= 0");
  Graph g(handle + bristles);
  for (int v = 0; v + 1 < handle; ++v) g.add_edge(v, v + 1);
  for (int b = 0; b < bristles; ++b) g.add_edge(handle - 1, handle + b);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

namespace {

std::vector<int> parse_ints(std::string_view text, char sep, std::string_view spec) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw InputError("bad integer '" + std::string(piece) + "' in family spec '" + std::string(spec) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Graph from_spec(std::string_view spec) {
  if (spec == "petersen") return petersen();
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InputError("family spec '" + std::string(spec) + "' lacks ':'");
  std::string_view name = spec.substr(0, colon);
  std::string_view args = spec.substr(colon + 1);

  auto one = [&] {
    auto v = parse_ints(args, ',', spec);
    if (v.size() != 1) throw InputError("family '" + std::string(name) + "' takes one integer");
    if (v[0] < 0 || v[0] > kVertexCap) throw InputError("order out of range in '" + std::string(spec) + "'");
    return v[0];
  };
  auto pair = [&] {
    auto v = parse_ints(args, 'x', spec);
    if (v.size() != 2) throw InputError("family '" + std::string(name) + "' takes AxB");
    return std::pair{v[0], v[1]};
  };

  try {
    if (name == "path") return path(one());
    if (name == "cycle") return cycle(one());
    if (name == "star") return star(one());
    if (name == "complete") return complete(one());
    if (name == "empty") return empty(one());
    if (name == "spider") {
      auto [legs, len] = pair();
      return spider(legs, len);
    }
    if (name == "broom") {
      auto [handle, bristles] = pair();
      return broom(handle, bristles);
    }
    if (name == "multipartite") {
      auto parts = parse_ints(args, ',', spec);
      return complete_multipartite(parts);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("family spec '" + std::string(spec) + "': " + e.what());
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace sparse_ramsey::families
