#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparse_ramsey/graph.hpp"
#include "sparse_ramsey/parallel.hpp"

namespace sparse_ramsey {

/// Largest order enumerated by default.
inline constexpr int kEnumerationCap = 9;
/// Largest order reachable with `allow_order_ten`.
inline constexpr int kEnumerationOverrideCap = 10;

/// Number of isomorphism classes of graphs on n vertices, 1 <= n <= 10.
std::uint64_t known_class_count(int n);

struct EnumerationOptions {
  bool allow_order_ten = false;
  int threads = 1;
};

/// Canonical one-word codes of every graph on n vertices, one per
/// isomorphism class, sorted ascending. Levels are generated once per
/// process and cached. Throws std::out_of_range outside 1..cap and
/// std::logic_error if a level's size differs from the known class count.
const std::vector<std::uint64_t>& canonical_codes(int n, const EnumerationOptions& options = {});

/// Canonical codes of all one-vertex extensions of `parents` (canonical
/// graphs on parent_order vertices) in which the new vertex has minimum
/// degree, sorted and deduplicated. Every graph on parent_order+1 vertices
/// whose minimum-degree-vertex deletions all lie in `parents` is produced.
std::vector<std::uint64_t> extend_by_vertex(std::span<const std::uint64_t> parents, int parent_order,
                                            int threads = 1);

/// A shard of the canonical stream on n vertices.
class EnumerationStream {
 public:
  EnumerationStream(int n, const std::vector<std::uint64_t>& codes, Shard shard);

  int order() const { return n_; }
  Shard shard() const { return shard_; }
  /// Elements in this shard.
  std::size_t size() const;
  std::uint64_t code(std::size_t i) const { return (*codes_)[position(i)]; }
  /// Position of the i-th shard element in the full stream.
  std::size_t position(std::size_t i) const {
    return static_cast<std::size_t>(shard_.index) + i * static_cast<std::size_t>(shard_.stride);
  }
  Graph graph(std::size_t i) const;

 private:
  int n_;
  const std::vector<std::uint64_t>* codes_;
  Shard shard_;
};

EnumerationStream enumerate(int n, Shard shard = {}, const EnumerationOptions& options = {});

/// Order-sensitive FNV-1a digest of a code sequence.
std::uint64_t codes_checksum(std::span<const std::uint64_t> codes);

}  // namespace sparse_ramsey
