#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specbound/vertex_set.hpp"

namespace specbound {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1 stored as neighbour bitsets.
///
/// Adjacency is kept symmetric and irreflexive by construction: the only
/// mutator is add_edge, which rejects self-loops and writes both directions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Duplicate edges are merged. Throws InvalidInput on self-loops or out-of-range endpoints.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  /// Returns false if the edge was already present.
  bool add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return u < order() && adjacency_[u].contains(v);
  }
  const VertexSet& neighbors(std::size_t u) const { return adjacency_.at(u); }
  std::size_t degree(std::size_t u) const { return adjacency_.at(u).count(); }
  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  /// Some k with every degree equal to k; nullopt for the null graph or an irregular one.
  std::optional<std::size_t> regular_degree() const noexcept;
  bool is_connected() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on the members of keep, relabelled in increasing order.
  Graph induced(const VertexSet& keep) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Either empty or one label per vertex.
  void set_labels(std::vector<std::string> labels);
  std::string label(std::size_t v) const;

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Hypergraph with nonempty hyperedges over vertices 0..nv-1.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Each edge is sorted and deduplicated. Throws InvalidInput for empty edges or out-of-range vertices.
  Hypergraph(std::size_t nv, std::vector<std::vector<std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return nv_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::vector<std::size_t>>& edges() const noexcept { return edges_; }
  VertexSet edge_set(std::size_t f) const;

  /// The common edge size k when the hypergraph is k-uniform.
  std::optional<std::size_t> uniformity() const noexcept;
  bool is_uniform() const noexcept { return uniformity().has_value(); }
  bool has_isolated_vertex() const;

 private:
  std::size_t nv_ = 0;
  std::vector<std::vector<std::size_t>> edges_;
};

/// A family of cliques of a graph that together cover every edge.
class CliqueCover {
 public:
  /// Throws InvalidInput if a listed set is not a clique or some edge is not covered.
  CliqueCover(Graph graph, std::vector<std::vector<std::size_t>> cliques);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::vector<std::size_t>>& cliques() const noexcept { return cliques_; }
  /// Number of cliques containing each vertex.
  std::vector<std::size_t> epsilon_degrees() const;
  /// Number of cliques containing both u and v.
  std::size_t edge_weight(std::size_t u, std::size_t v) const;

 private:
  Graph graph_;
  std::vector<std::vector<std::size_t>> cliques_;
};

}  // namespace specbound
