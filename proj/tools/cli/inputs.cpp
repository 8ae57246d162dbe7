#include "inputs.hpp"

#include <charconv>
#include <fstream>
#include <random>

#include "sparse_ramsey/errors.hpp"
#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/graph6.hpp"

namespace sparse_ramsey::cli {

namespace {

Graph random_graph(std::string_view args, std::uint64_t seed) {
  const auto comma = args.find(',');
  if (comma == std::string_view::npos) throw InputError("gnp takes n,p");
  int n = 0;
  auto [ptr, ec] = std::from_chars(args.data(), args.data() + comma, n);
  if (ec != std::errc{} || ptr != args.data() + comma || n < 0 || n > kVertexCap)
    throw InputError("gnp: bad vertex count");
  double p = 0;
  try {
    std::size_t used = 0;
    std::string rest(args.substr(comma + 1));
    p = std::stod(rest, &used);
    if (used != rest.size()) throw InputError("gnp: bad probability");
  } catch (const std::logic_error&) {
    throw InputError("gnp: bad probability");
  }
  if (!(p >= 0 && p <= 1)) throw InputError("gnp: probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph parse_token(const std::string& token, std::uint64_t seed) {
  if (token.rfind("gnp:", 0) == 0) return random_graph(std::string_view(token).substr(4), seed);
  if (token.find(':') != std::string::npos || token == "petersen") return families::from_spec(token);
  return from_graph6(token);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<NamedGraph> load_graphs(const std::vector<std::string>& tokens, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  std::uint64_t draw = 0;
  auto add = [&](const std::string& token, const std::string& label) {
    try {
      out.push_back({label, parse_token(token, seed + draw++)});
    } catch (const InputError& e) {
      throw InputError(label + ": " + e.what(), e.position());
    }
  };
  for (const auto& token : tokens) {
    if (!token.empty() && token[0] == '@') {
      const std::string path = token.substr(1);
      std::ifstream in(path);
      if (!in) throw InputError("cannot open graph file '" + path + "'");
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        add(line, path + ":" + std::to_string(lineno));
      }
    } else {
      add(token, token);
    }
  }
  return out;
}

}  // namespace sparse_ramsey::cli
