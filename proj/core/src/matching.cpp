#include "sparse_ramsey/matching.hpp"

#include <stdexcept>

namespace sparse_ramsey {

namespace {

class Augmenter {
 public:
  Augmenter(const Graph& host, const VertexSet& y)
      : host_(host), y_(y), match_of_y_(static_cast<std::size_t>(host.order()), -1) {}

  bool augment(int x) {
    seen_x_.insert(x);
    for (int y : (host_.neighbors(x) & y_) - seen_y_) {
      seen_y_.insert(y);
      if (match_of_y_[y] < 0 || augment(match_of_y_[y])) {
        match_of_y_[y] = x;
        return true;
      }
    }
    return false;
  }

  void reset_search() {
    seen_x_ = {};
    seen_y_ = {};
  }

  const VertexSet& seen_x() const { return seen_x_; }
  const VertexSet& seen_y() const { return seen_y_; }
  const std::vector<int>& match_of_y() const { return match_of_y_; }

 private:
  const Graph& host_;
  VertexSet y_;
  std::vector<int> match_of_y_;
  VertexSet seen_x_;
  VertexSet seen_y_;
};

void validate(const Graph& host, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw std::invalid_argument("hall_check: X and Y must be disjoint");
  VertexSet all = host.vertices();
  if (!x.is_subset_of(all) || !y.is_subset_of(all))
    throw std::invalid_argument("hall_check: X and Y must lie in the host");
}

}  // namespace

HallResult hall_check(const Graph& host, const VertexSet& x, const VertexSet& y) {
  validate(host, x, y);
  Augmenter aug(host, y);
  HallResult result;
  for (int v : x) {
    aug.reset_search();
    if (!aug.augment(v)) {
      result.violator = aug.seen_x();
      result.violator_neighbors = aug.seen_y();
      return result;
    }
  }
  result.saturated = true;
  for (int w : y)
    if (aug.match_of_y()[w] >= 0) result.matching.emplace_back(aug.match_of_y()[w], w);
  return result;
}

int maximum_bipartite_matching(const Graph& host, const VertexSet& x, const VertexSet& y) {
  validate(host, x, y);
  Augmenter aug(host, y);
  int size = 0;
  for (int v : x) {
    aug.reset_search();
    if (aug.augment(v)) ++size;
  }
  return size;
}

}  // namespace sparse_ramsey
