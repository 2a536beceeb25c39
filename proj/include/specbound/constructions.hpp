#pragma once

#include <cstddef>
#include <span>

#include "specbound/graph.hpp"

namespace specbound {

inline constexpr std::size_t kDefaultPowerBudget = 4096;

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);

Graph complement(const Graph& g);

/// Disjoint union with every cross edge added; vertices of g1 come first.
Graph join(const Graph& g1, const Graph& g2);

/// Each edge replaced by a path of length two. The edge-vertex for the i-th
/// edge in lexicographic order gets index n + i.
Graph subdivision(const Graph& g);

/// Vertices are the k-subsets of {1..n} in colex order (labels "1,2", "1,3", ...);
/// two subsets are adjacent when disjoint. Requires n >= 2k >= 2.
Graph kneser(std::size_t n, std::size_t k);

/// Binary strings of length d (vertex index = value, label = MSB-first string);
/// adjacent when the Hamming distance lies in [1, r]. Requires 1 <= r < d.
Graph hamming_leq(std::size_t d, std::size_t r);

/// Strong-product power. Vertex index of the tuple (u_1..u_k) is sum u_i n^(k-i)
/// (row-major, first coordinate most significant). Throws BudgetExceeded when
/// n^k > budget.
Graph strong_power(const Graph& g, std::size_t k, std::size_t budget = kDefaultPowerBudget);

/// Row-major index of a tuple of base vertices.
std::size_t power_index(std::size_t base_order, std::span<const std::size_t> tuple);

/// One vertex per hyperedge; adjacent when the hyperedges intersect.
Graph intersection_graph(const Hypergraph& h);

}  // namespace specbound
