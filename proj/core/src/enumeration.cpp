#include "sparse_ramsey/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "sparse_ramsey/canonical.hpp"

namespace sparse_ramsey {

namespace {

constexpr std::array<std::uint64_t, 11> kClassCounts = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void extend_shard(std::span<const std::uint64_t> parents, int n, Shard shard, std::vector<std::uint64_t>& out) {
  std::size_t compact_at = 1U << 20;
  for (std::size_t i = static_cast<std::size_t>(shard.index); i < parents.size();
       i += static_cast<std::size_t>(shard.stride)) {
    const detail::MaskGraph parent = detail::decode_masks(parents[i], n);
    // below[d] = parent vertices of degree < d.
    std::array<std::uint32_t, kCanonicalCap + 2> below{};
    for (int d = 0; d <= n + 1; ++d)
      for (int v = 0; v < n; ++v)
        if (std::popcount(parent.rows[v]) < d) below[d] |= 1U << v;

    detail::MaskGraph child = parent;
    child.n = n + 1;
    const std::uint32_t subsets = 1U << n;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      const int d = std::popcount(s);
      // The new vertex must not exceed any degree in the child.
      if (below[d] & ~s) continue;
      if (d >= 1 && (below[d - 1] & s)) continue;
      for (int v = 0; v < n; ++v) child.rows[v] = parent.rows[v] | (((s >> v) & 1U) << n);
      child.rows[n] = s;
      out.push_back(detail::canonical_code(child));
    }
    if (out.size() >= compact_at) {
      sort_unique(out);
      compact_at = std::max(compact_at, 2 * out.size());
    }
  }
  sort_unique(out);
}

struct LevelCache {
  std::mutex mutex;
  std::map<int, std::vector<std::uint64_t>> levels;
};

LevelCache& cache() {
  static LevelCache c;
  return c;
}

}  // namespace

std::uint64_t known_class_count(int n) {
  if (n < 1 || n > kEnumerationOverrideCap)
    throw std::out_of_range("no class count recorded for order " + std::to_string(n));
  return kClassCounts[static_cast<std::size_t>(n)];
}

std::vector<std::uint64_t> extend_by_vertex(std::span<const std::uint64_t> parents, int parent_order,
                                            int threads) {
  if (parent_order < 0 || parent_order + 1 > 11)
    throw std::out_of_range("one-vertex extension needs parent order 0..10");
  threads = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(threads));
  run_sharded(threads, [&](Shard shard) { extend_shard(parents, parent_order, shard, parts[shard.index]); });
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  if (threads > 1) sort_unique(out);
  return out;
}

const std::vector<std::uint64_t>& canonical_codes(int n, const EnumerationOptions& options) {
  const int cap = options.allow_order_ten ? kEnumerationOverrideCap : kEnumerationCap;
  if (n < 1 || n > cap)
    throw std::out_of_range("enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  LevelCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  if (c.levels.empty()) c.levels[1] = {0};
  int have = c.levels.rbegin()->first;
  while (have < n) {
    std::vector<std::uint64_t> next = extend_by_vertex(c.levels[have], have, options.threads);
    if (next.size() != kClassCounts[static_cast<std::size_t>(have + 1)])
      throw std::logic_error("enumeration produced " + std::to_string(next.size()) + " classes on " +
                             std::to_string(have + 1) + " vertices, expected " +
                             std::to_string(kClassCounts[static_cast<std::size_t>(have + 1)]));
    c.levels[have + 1] = std::move(next);
    ++have;
  }
  return c.levels[n];
}

EnumerationStream::EnumerationStream(int n, const std::vector<std::uint64_t>& codes, Shard shard)
    : n_(n), codes_(&codes), shard_(shard) {
  if (shard.stride < 1 || shard.index < 0 || shard.index >= shard.stride)
    throw std::invalid_argument("invalid shard " + std::to_string(shard.index) + "/" + std::to_string(shard.stride));
}

std::size_t EnumerationStream::size() const {
  const auto total = codes_->size();
  const auto idx = static_cast<std::size_t>(shard_.index);
  const auto stride = static_cast<std::size_t>(shard_.stride);
  return total > idx ? (total - idx + stride - 1) / stride : 0;
}

Graph EnumerationStream::graph(std::size_t i) const { return decode_small_code(code(i), n_); }

EnumerationStream enumerate(int n, Shard shard, const EnumerationOptions& options) {
  return EnumerationStream(n, canonical_codes(n, options), shard);
}

std::uint64_t codes_checksum(std::span<const std::uint64_t> codes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t c : codes)
    for (int b = 0; b < 8; ++b) {
      h ^= (c >> (8 * b)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  return h;
}

}  // namespace sparse_ramsey
