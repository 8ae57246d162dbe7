#include "sparse_ramsey/target.hpp"

#include <charconv>

#include "sparse_ramsey/containment.hpp"
#include "sparse_ramsey/errors.hpp"
#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/independence.hpp"

namespace sparse_ramsey {

Graph Target::graph() const {
  switch (kind) {
    case Kind::kPath: return families::path(k);
    case Kind::kCycle: return families::cycle(k);
    case Kind::kClique: return families::complete(k);
  }
  return {};
}

std::string Target::to_string() const {
  const char* prefix = kind == Kind::kPath ? "P:" : kind == Kind::kCycle ? "C:" : "K:";
  return prefix + std::to_string(k);
}

Target parse_target(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') throw InputError("target '" + std::string(text) + "' must look like P:k or C:k");
  int k = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("target '" + std::string(text) + "' has a bad length", 2);
  switch (text[0]) {
    case 'P':
      if (k < 1) throw InputError("path target needs k >= 1");
      return Target::path(k);
    case 'C':
      if (k < 3) throw InputError("cycle target needs k >= 3");
      return Target::cycle(k);
    case 'K':
      if (k < 1) throw InputError("clique target needs k >= 1");
      return Target::clique(k);
    default: throw InputError("target kind must be P, C or K", 0);
  }
}

bool contains_target(const Graph& g, const Target& t) {
  switch (t.kind) {
    case Target::Kind::kPath: return contains_path(g, t.k);
    case Target::Kind::kCycle: return contains_cycle(g, t.k);
    case Target::Kind::kClique: return independence_number(complement(g)) >= t.k;
  }
  return false;
}

}  // namespace sparse_ramsey
