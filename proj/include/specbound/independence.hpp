#pragma once

#include <cstddef>

#include "specbound/graph.hpp"

namespace specbound {

inline constexpr std::size_t kDefaultAlphaBudget = 64;

/// Throws InvalidInput if s has a different universe than g.
bool is_independent(const Graph& g, const VertexSet& s);

struct IndependentSet {
  std::size_t alpha = 0;
  /// Lexicographically least maximum independent set (as a sorted list).
  VertexSet witness;
};

/// Exact independence number by branch and bound, bounding with a greedy
/// clique partition of the candidate set. Throws BudgetExceeded when n > budget.
IndependentSet max_independent_set(const Graph& g, std::size_t budget = kDefaultAlphaBudget);

/// Maximal independent set: repeatedly takes the vertex of minimum degree in
/// the remaining graph (lowest index on ties) and deletes its closed neighbourhood.
VertexSet greedy_independent_set(const Graph& g);

}  // namespace specbound
