#pragma once

#include <vector>

#include "specbound/graph.hpp"
#include "specbound/linalg.hpp"

namespace specbound {

enum class MatrixKind { adjacency, laplacian, signless_laplacian, normalized_laplacian };

/// A, D - A, D + A, or I - D^{-1/2} A D^{-1/2}. The normalized Laplacian throws
/// InvalidInput when g has an isolated vertex.
SymMatrix build_matrix(const Graph& g, MatrixKind kind);

/// nv x |E(H)| 0/1 vertex-edge incidence matrix.
RectMatrix incidence_matrix(const Hypergraph& h);

/// n x r vertex-clique incidence matrix of a cover.
RectMatrix incidence_matrix(const CliqueCover& c);

struct CliqueCoverMatrix {
  SymMatrix matrix;
  std::vector<double> epsilon_degrees;
};

/// A_eps: epsilon-degree on the diagonal, the number of cliques containing {i,j}
/// on edges, 0 elsewhere. Equal to B B^T for the vertex-clique incidence B.
CliqueCoverMatrix clique_cover_matrix(const CliqueCover& c);

/// max over edges of sqrt(d_u d_v); an upper bound on lambda_max(A). Throws for edgeless graphs.
double edge_degree_eig_bound(const Graph& g);

Vector ones_vector(std::size_t n);

}  // namespace specbound
