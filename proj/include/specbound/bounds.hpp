#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/linalg.hpp"

namespace specbound {

enum class PairClass { in_m, in_p, invalid };

std::string_view pair_class_name(PairClass c);

/// A matrix-vector pair (M, x) on a graph together with everything the
/// unified bound needs: the group inverse, the diagonal ratios M_uu / x_u^2,
/// and the quadratic form x^T M^# x.
///
/// in_p: M is PSD, x is total nonzero and lies in R(M), and M_ij x_i x_j <= 0 on
///   every nonadjacent pair (up to cert_rel ||M||_inf ||x||_inf^2).
/// in_m: in_p, and additionally |M_ij| <= cert_rel ||M||_inf on nonadjacent pairs.
struct MatrixVectorPair {
  Graph graph;
  SymMatrix m;
  Vector x;
  SymMatrix group_inv;
  Spectrum spectrum;
  Vector ratios;
  double quad = 0.0;
  PairClass classification = PairClass::invalid;
  std::vector<std::string> reasons;
  Tolerances tol;

  bool valid() const noexcept { return classification != PairClass::invalid; }
  double max_ratio() const;
};

/// Throws InvalidInput on dimension mismatch; otherwise always returns, with
/// every failed condition listed in `reasons` when the pair is invalid.
MatrixVectorPair classify_pair(const Graph& g, const SymMatrix& m, const Vector& x, const Tolerances& tol = {});

struct BoundReport {
  std::string name;
  bool applicable = true;
  double value = 0.0;
  /// Parameters echoed from the computation (eigenvalues, degrees, sizes).
  std::map<std::string, double> inputs;
  /// The same bound evaluated along an independent route, when one exists.
  std::optional<double> cross_check;
  std::string certificate_hint;
  /// Free-form origin of caller-supplied parameters (for example where t came from).
  std::string provenance;
  /// Why the bound was not applicable.
  std::string reason;

  /// |value - cross_check| within 1e-7 relative, or no cross-check present.
  bool cross_check_agrees() const;
};

/// x^T M^# x * max_u M_uu / x_u^2. Throws InvalidInput for an invalid pair.
BoundReport bound_F(const MatrixVectorPair& pair);
/// x^T M^# x / |S| * sum_{u in S} M_uu / x_u^2 for a nonempty independent S.
BoundReport bound_F_S(const MatrixVectorPair& pair, const VertexSet& s);
/// Average of the t largest ratios times the quadratic form. The caller
/// promises alpha >= t; `t_source` records where that promise came from.
BoundReport bound_F_T(const MatrixVectorPair& pair, std::size_t t, std::string_view t_source = "caller");

/// Hoffman, Haemers, Laplacian and normalized-Laplacian bounds. Entries whose
/// preconditions fail are returned with applicable = false and a reason.
std::vector<BoundReport> classical_bounds(const Graph& g, const Tolerances& tol = {});

/// n (mu - mean degree over S) / mu, mu the largest Laplacian eigenvalue.
BoundReport laplacian_set_bound(const Graph& g, const VertexSet& s, const Tolerances& tol = {});
/// lambda e^T (A + lambda I)^{-1} e for lambda > 0 with A + lambda I positive definite.
BoundReport resolvent_bound(const Graph& g, double lambda, const Tolerances& tol = {});
/// rho^{-1} max_u M_uu / x_u^2 with (rho, x) the Perron pair of M.
BoundReport perron_bound(const Graph& g, const SymMatrix& m, const Tolerances& tol = {});
/// F(L, x) for a connected graph and a zero-sum total nonzero x.
BoundReport laplacian_vector_bound(const Graph& g, const Vector& x, const Tolerances& tol = {});
/// n t / r for PSD M with constant diagonal t, constant row sum r > 0, and M_ij <= 0 off the edges.
BoundReport row_sum_bound(const Graph& g, const SymMatrix& m, const Tolerances& tol = {});
/// F(A_eps, d^eps).
BoundReport clique_cover_bound(const CliqueCover& c, const Tolerances& tol = {});
/// k e^T (B^T B)^# e for a k-uniform hypergraph without isolated vertices. The
/// report also carries the exact matching number (when the intersection graph
/// is within the exact-search budget) and whether equality holds.
BoundReport hypergraph_matching_bound(const Hypergraph& h, const Tolerances& tol = {});

}  // namespace specbound
