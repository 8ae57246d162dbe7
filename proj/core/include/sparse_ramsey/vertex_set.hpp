#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sparse_ramsey {

/// Maximum number of vertices any Graph may carry.
inline constexpr int kVertexCap = 128;

/// Fixed-width bit set over vertex labels 0..kVertexCap-1.
class VertexSet {
 public:
  static constexpr int kWords = kVertexCap / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// The set {0, ..., n-1}.
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest member, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Lowest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kVertexCap) return -1;
    int w = v >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (word) return w * 64 + std::countr_zero(word);
      if (++w >= kWords) return -1;
      word = words_[w];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  // Range-for support.
  class iterator {
   public:
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* set_;
    int v_;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace sparse_ramsey
