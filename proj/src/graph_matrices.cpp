#include "specbound/graph_matrices.hpp"

#include <cmath>

#include "specbound/errors.hpp"

namespace specbound {

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const auto n = g.order();
  const auto deg = g.degrees();
  SymMatrix m(n);
  if (kind == MatrixKind::normalized_laplacian) {
    for (std::size_t u = 0; u < n; ++u)
      if (deg[u] == 0) throw InvalidInput("normalized Laplacian undefined: vertex " + std::to_string(u) + " is isolated");
    for (std::size_t u = 0; u < n; ++u) m.set(u, u, 1.0);
    for (const auto& [u, v] : g.edges())
      m.set(u, v, -1.0 / std::sqrt(static_cast<double>(deg[u]) * static_cast<double>(deg[v])));
    return m;
  }
  const double off = kind == MatrixKind::laplacian ? -1.0 : 1.0;
  for (const auto& [u, v] : g.edges()) m.set(u, v, off);
  if (kind != MatrixKind::adjacency)
    for (std::size_t u = 0; u < n; ++u) m.set(u, u, static_cast<double>(deg[u]));
  return m;
}

RectMatrix incidence_matrix(const Hypergraph& h) {
  RectMatrix b = RectMatrix::Zero(static_cast<Eigen::Index>(h.vertex_count()), static_cast<Eigen::Index>(h.edge_count()));
  for (std::size_t f = 0; f < h.edge_count(); ++f)
    for (auto u : h.edges()[f]) b(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(f)) = 1.0;
  return b;
}

RectMatrix incidence_matrix(const CliqueCover& c) {
  const auto& cliques = c.cliques();
  RectMatrix b = RectMatrix::Zero(static_cast<Eigen::Index>(c.graph().order()), static_cast<Eigen::Index>(cliques.size()));
  for (std::size_t q = 0; q < cliques.size(); ++q)
    for (auto u : cliques[q]) b(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(q)) = 1.0;
  return b;
}

CliqueCoverMatrix clique_cover_matrix(const CliqueCover& c) {
  const auto n = c.graph().order();
  CliqueCoverMatrix out{SymMatrix(n), {}};
  for (const auto& clique : c.cliques())
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i; j < clique.size(); ++j) out.matrix.add(clique[i], clique[j], 1.0);
  for (auto d : c.epsilon_degrees()) out.epsilon_degrees.push_back(static_cast<double>(d));
  return out;
}

double edge_degree_eig_bound(const Graph& g) {
  if (g.size() == 0) throw InvalidInput("edge_degree_eig_bound: graph has no edges");
  const auto deg = g.degrees();
  double best = 0.0;
  for (const auto& [u, v] : g.edges())
    best = std::max(best, std::sqrt(static_cast<double>(deg[u]) * static_cast<double>(deg[v])));
  return best;
}

Vector ones_vector(std::size_t n) { return Vector::Ones(static_cast<Eigen::Index>(n)); }

}  // namespace specbound
