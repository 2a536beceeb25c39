#include "specbound/independence.hpp"

#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw InvalidInput("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                       std::to_string(g.order()));
  for (auto v = s.first(); v < s.universe(); v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

namespace {

class IndependenceSearch {
 public:
  explicit IndependenceSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) {
      auto keep = g.neighbors(v).complement();
      keep.erase(v);
      non_neighbors_.push_back(std::move(keep));
    }
  }

  /// Size of a maximum independent set inside candidates, stopping early once `target` is reached.
  std::size_t solve(const VertexSet& candidates, std::size_t target) {
    best_ = 0;
    target_ = target;
    expand(0, candidates);
    return best_;
  }

 private:
  // Vertices of `p` in the order they were placed into clique classes, with the
  // number of classes used up to and including each one. Any independent set
  // meets each class at most once.
  void partition(const VertexSet& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    VertexSet remaining = p;
    std::size_t classes = 0;
    while (!remaining.empty()) {
      ++classes;
      VertexSet open = remaining;
      while (!open.empty()) {
        const auto v = open.first();
        open.erase(v);
        open &= g_.neighbors(v);
        remaining.erase(v);
        order.push_back(v);
        bound.push_back(classes);
      }
    }
  }

  void expand(std::size_t size, VertexSet p) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    partition(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (best_ >= target_) return;
      if (size + bound[i] <= best_) return;
      const auto v = order[i];
      VertexSet next = p & non_neighbors_[v];
      if (next.empty()) {
        if (size + 1 > best_) best_ = size + 1;
      } else {
        expand(size + 1, std::move(next));
      }
      p.erase(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<VertexSet> non_neighbors_;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
};

}  // namespace

IndependentSet max_independent_set(const Graph& g, std::size_t budget) {
  const auto n = g.order();
  if (n > budget)
    throw BudgetExceeded("max_independent_set: n = " + std::to_string(n) + " exceeds the budget of " +
                         std::to_string(budget));
  IndependentSet out{0, VertexSet(n)};
  if (n == 0) return out;

  IndependenceSearch search(g);
  const auto all = VertexSet::full(n);
  out.alpha = search.solve(all, n);

  // Lexicographically least witness: commit to the smallest vertex that still
  // extends to a maximum independent set using only larger vertices.
  VertexSet candidates = all;
  std::size_t chosen = 0;
  for (std::size_t v = 0; v < n && chosen < out.alpha; ++v) {
    if (!candidates.contains(v)) continue;
    VertexSet rest = candidates & g.neighbors(v).complement();
    for (std::size_t u = 0; u <= v; ++u) rest.erase(u);
    const auto need = out.alpha - chosen - 1;
    if (need == 0 || search.solve(rest, need) >= need) {
      out.witness.insert(v);
      ++chosen;
      candidates = std::move(rest);
    } else {
      candidates.erase(v);
    }
  }
  return out;
}

VertexSet greedy_independent_set(const Graph& g) {
  const auto n = g.order();
  VertexSet remaining = VertexSet::full(n);
  VertexSet chosen(n);
  while (!remaining.empty()) {
    std::size_t pick = n;
    std::size_t pick_degree = n + 1;
    for (auto v = remaining.first(); v < n; v = remaining.next(v)) {
      const auto d = g.neighbors(v).intersection_count(remaining);
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    chosen.insert(pick);
    remaining.erase(pick);
    remaining -= g.neighbors(pick);
  }
  return chosen;
}

}  // namespace specbound
