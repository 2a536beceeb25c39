#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/recipes.hpp"

namespace specbound {

enum class Verdict { verified, refuted };

std::string_view verdict_name(Verdict v);

struct Conclusion {
  /// One of alpha, theta, theta_prime, shannon, set_bound.
  std::string quantity;
  double value = 0.0;
  /// Human-readable claim, e.g. "alpha(G^2) = 5".
  std::string statement;
};

struct ConditionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::string kind;
  Verdict verdict = Verdict::refuted;
  std::optional<double> c_value;
  std::vector<Conclusion> conclusions;
  PairClass pair_class = PairClass::invalid;
  VertexSet witness;
  std::vector<ConditionCheck> conditions;
  /// Entry-level failure messages.
  std::vector<std::string> failures;
  std::optional<double> f_value;
  std::map<std::string, double> details;
  std::vector<std::string> notes;

  bool verified() const noexcept { return verdict == Verdict::verified; }
};

/// Equality conditions for F: M[C] diagonal, M_uu / x_u^2 = c on C where c is the
/// global maximum ratio, and c x_v = sum_{u in C} M_vu / x_u for v outside C.
/// Throws InvalidInput for an invalid pair, an empty C, or a dependent C.
CertificateReport check_pair_certificate(const MatrixVectorPair& pair, const VertexSet& c_set);

/// Same conditions for F_S with c any common ratio on S. Concludes |S| = F_S only.
CertificateReport check_set_certificate(const MatrixVectorPair& pair, const VertexSet& s);

struct StructuralAux {
  std::optional<Graph> semiregular;
  std::optional<std::vector<std::vector<std::size_t>>> cover;
  std::optional<Hypergraph> hypergraph;
};

/// One report per structural condition (1)-(8). A Verified condition is also
/// rebuilt as a pair and rechecked; the report records whether the two agree.
std::vector<CertificateReport> structural_certificates(const Graph& g, const VertexSet& c_set,
                                                       const StructuralAux& aux = {}, const Tolerances& tol = {});

struct KroneckerOptions {
  std::size_t budget = kDefaultKronBudget;
  /// Compare F(M, x) against a numerical theta value (informational only).
  bool check_theta = true;
};

/// Builds (M^{⊗k}, x^{⊗k}) on strong_power(g, k) and checks the equality
/// conditions for c_set, given in row-major power indices.
CertificateReport kronecker_certificate(const MatrixVectorPair& pair, std::size_t k, const VertexSet& c_set,
                                        const KroneckerOptions& opts = {});

/// Unit diagonal, a_ij = 1 - M_ij / (y_i y_j) with y = x / sqrt(x^T M^# x).
/// For InM pairs this is feasible for the theta program; for InP pairs
/// a_ij >= 1 on nonadjacent pairs. Its largest eigenvalue is at most F.
SymMatrix pair_to_theta_matrix(const MatrixVectorPair& pair);

struct SubdivisionComparison {
  std::size_t edges = 0;
  std::size_t order = 0;
  /// lambda_max of A(S(g)).
  double lambda = 0.0;
  /// (m + n) lambda^2 / (4 + lambda^2)
  double spectral_bound = 0.0;
  double margin = 0.0;
};

/// The exact α(S(g)) = m from the subdivision certificate against the spectral
/// bound of S(g).
SubdivisionComparison subdivision_comparison(const Graph& base, const Tolerances& tol = {});

}  // namespace specbound
