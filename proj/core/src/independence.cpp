#include "sparse_ramsey/independence.hpp"

#include <vector>

namespace sparse_ramsey {

namespace {

// Branch and bound: a greedy cover of the candidates by cliques of g bounds
// how many of them an independent set can still take.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    VertexSet current;
    expand(current, g_.vertices());
    return best_;
  }

 private:
  void cover(const VertexSet& cand, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    VertexSet left = cand;
    int clique = 0;
    while (!left.empty()) {
      ++clique;
      VertexSet open = left;
      while (!open.empty()) {
        int v = open.first();
        open.erase(v);
        open &= g_.neighbors(v);
        left.erase(v);
        order.push_back(v);
        bound.push_back(clique);
      }
    }
  }

  void expand(VertexSet& current, VertexSet cand) {
    // A vertex with at most one candidate neighbour belongs to some maximum
    // independent set of the candidates, so take it without branching.
    std::vector<int> forced;
    for (bool changed = true; changed;) {
      changed = false;
      for (int v : cand) {
        if ((g_.neighbors(v) & cand).size() <= 1) {
          forced.push_back(v);
          current.insert(v);
          cand -= g_.neighbors(v);
          cand.erase(v);
          changed = true;
          break;
        }
      }
    }
    if (cand.empty()) {
      if (current.size() > best_size_) {
        best_size_ = current.size();
        best_ = current;
      }
    } else {
      branch(current, cand);
    }
    for (int v : forced) current.erase(v);
  }

  void branch(VertexSet& current, VertexSet cand) {
    std::vector<int> order, bound;
    cover(cand, order, bound);
    const int have = current.size();
    for (std::size_t i = order.size(); i-- > 0;) {
      if (have + bound[i] <= best_size_) return;
      const int v = order[i];
      current.insert(v);
      VertexSet next = cand - g_.neighbors(v);
      next.erase(v);
      expand(current, next);
      current.erase(v);
      cand.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
  int best_size_ = 0;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) { return IndependentSetSearch(g).run(); }

int independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

}  // namespace sparse_ramsey
