#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace specbound {

using Vector = Eigen::VectorXd;
using RectMatrix = Eigen::MatrixXd;

inline constexpr std::size_t kDefaultKronBudget = 4096;

/// Numeric thresholds shared by every check in the library.
struct Tolerances {
  /// Eigenvalues with |lambda| <= rank_rel * n * max|lambda| count as zero.
  double rank_rel = 1e-10;
  /// PSD test: lambda_min >= -psd_rel * max(1, lambda_max).
  double psd_rel = 1e-9;
  /// Slack for certificate equalities, range membership and sign conditions.
  double cert_rel = 1e-8;
  /// Eigen-pair residual, scaled by 1 + ||M||_inf.
  double residual = 1e-9;

  double rank_cutoff(std::size_t n, double max_abs_eigenvalue) const {
    return rank_rel * static_cast<double>(n == 0 ? 1 : n) * max_abs_eigenvalue;
  }
  /// Throws InvalidInput unless every field is positive.
  void validate() const;
};

/// Dense real symmetric matrix. Writes go through set(), which updates both
/// triangles, so entries (i,j) and (j,i) are always bit-identical.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : a_(Eigen::MatrixXd::Zero(index(n), index(n))) {}

  static SymMatrix identity(std::size_t n);
  static SymMatrix ones(std::size_t n);
  static SymMatrix diagonal(const Vector& d);
  /// Throws InvalidInput if |a_ij - a_ji| > symmetry_tol anywhere. The upper triangle is kept.
  static SymMatrix from_dense(const Eigen::MatrixXd& a, double symmetry_tol = 0.0);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return a_(index(i), index(j)); }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value) { set(i, j, (*this)(i, j) + value); }

  const Eigen::MatrixXd& dense() const noexcept { return a_; }
  /// Maximum absolute row sum.
  double norm_inf() const;
  double max_abs() const;

  SymMatrix shifted(double s) const;
  SymMatrix scaled(double s) const;
  Vector operator*(const Vector& x) const { return a_ * x; }
  SymMatrix operator+(const SymMatrix& b) const;
  SymMatrix operator-(const SymMatrix& b) const;

 private:
  static Eigen::Index index(std::size_t i) { return static_cast<Eigen::Index>(i); }
  explicit SymMatrix(Eigen::MatrixXd a) : a_(std::move(a)) {}

  Eigen::MatrixXd a_;
};

/// Full eigendecomposition, eigenvalues ascending.
struct Spectrum {
  Vector values;
  /// Orthonormal eigenvectors as columns, in the order of values.
  Eigen::MatrixXd vectors;
  /// Absolute cutoff below which an eigenvalue counts as zero.
  double rank_tol = 0.0;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(values.size()); }
  double min() const { return values(0); }
  double max() const { return values(values.size() - 1); }
  double max_abs() const;
  std::size_t rank() const;
  bool is_zero(Eigen::Index i) const { return std::abs(values(i)) <= rank_tol; }
};

/// Dense symmetric eigendecomposition, eigenvalues ascending. Eigen's
/// tridiagonal QR occasionally reports non-convergence on highly structured
/// input, so the decomposition is retried on fixed symmetric permutations and
/// shifts of the matrix. Returns false only if every attempt fails.
bool dense_eigen(const Eigen::MatrixXd& a, Vector& values, Eigen::MatrixXd* vectors);

/// Deterministic for fixed input. Throws NumericalError on non-convergence or if
/// the residual / orthonormality checks fail.
Spectrum sym_eigen(const SymMatrix& m, const Tolerances& tol = {});

/// U diag(lambda^+) U^T, where lambda^+ inverts the eigenvalues above the rank cutoff.
SymMatrix group_inverse(const Spectrum& spectrum);
SymMatrix group_inverse(const SymMatrix& m, const Tolerances& tol = {});

/// Moore-Penrose inverse computed as (A^T A)^# A^T.
RectMatrix pseudo_inverse(const RectMatrix& a, const Tolerances& tol = {});

/// ||M M^# x - x||_inf <= cert_rel (1 + ||x||_inf)
bool in_range(const SymMatrix& m, const Vector& x, const Tolerances& tol = {});
bool in_range(const SymMatrix& m, const SymMatrix& group_inv, const Vector& x, const Tolerances& tol);

/// lambda_min >= -psd_rel * max(1, lambda_max)
bool is_psd(const SymMatrix& m, const Tolerances& tol = {});
bool is_psd(const Spectrum& spectrum, const Tolerances& tol);

/// Standard Kronecker layout: (a ⊗ b)(i*nb + k, j*nb + l) = a(i,j) b(k,l).
SymMatrix kron(const SymMatrix& a, const SymMatrix& b, std::size_t budget = kDefaultKronBudget);
SymMatrix kron_power(const SymMatrix& m, std::size_t k, std::size_t budget = kDefaultKronBudget);
Vector kron_vec(const Vector& a, const Vector& b);
Vector kron_power_vec(const Vector& x, std::size_t k, std::size_t budget = kDefaultKronBudget);

double norm_inf(const Vector& x);

}  // namespace specbound
