#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specbound/bounds.hpp"

namespace specbound {

/// (A + lambda I, e), lambda > 0 with A + lambda I positive definite.
struct ResolventRecipe {
  double lambda = 0.0;
};
/// (A - tau I, e) on a regular graph, tau the least adjacency eigenvalue.
struct HoffmanRecipe {};
/// (mu I - L, e), mu the largest Laplacian eigenvalue.
struct LaplacianRecipe {};
/// (mu I - normalized Laplacian, sqrt(d)).
struct NormalizedRecipe {};
/// Signless Laplacian of S(g) with x = d on the original vertices and 2 on the
/// edge-vertices. Applied to the base graph g; the pair lives on subdivision(g).
struct SubdivisionRecipe {};
/// h: a spanning semiregular bipartite subgraph. Vertices of class V_i get the
/// diagonal entry r_{3-i}; off the diagonal M is A(h).
struct SemiregularRecipe {
  Graph h;
};
/// Applied to the base graph g; the pair lives on join(g, complement of K_s),
/// the s new vertices last.
struct JoinRecipe {
  std::size_t s = 0;
};
/// (A_eps, d^eps) for the given cliques.
struct CliqueCoverRecipe {
  std::vector<std::vector<std::size_t>> cliques;
};
/// (B^T B, e) on the intersection graph; the input graph must equal it.
struct HypergraphRecipe {
  Hypergraph h;
};
struct ExplicitRecipe {
  SymMatrix m;
  Vector x;
};

using PairRecipe = std::variant<ResolventRecipe, HoffmanRecipe, LaplacianRecipe, NormalizedRecipe, SubdivisionRecipe,
                                SemiregularRecipe, JoinRecipe, CliqueCoverRecipe, HypergraphRecipe, ExplicitRecipe>;

std::string recipe_name(const PairRecipe& recipe);

struct BuiltPair {
  MatrixVectorPair pair;
  /// The independent set the construction is designed around, when there is one.
  std::optional<VertexSet> suggested_c;
  std::string description;
};

/// Throws InvalidInput naming the failed precondition.
BuiltPair build_pair(const Graph& g, const PairRecipe& recipe, const Tolerances& tol = {});

/// A(g) + diag(|C| on C, |V−C| − d_{G−C}(v) off C): the join-shaped pair matrix
/// for an independent C whose outside vertices see all of C.
SymMatrix join_pair_matrix(const Graph& g, const VertexSet& c);

}  // namespace specbound
