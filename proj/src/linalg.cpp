#include "specbound/linalg.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "specbound/errors.hpp"

namespace specbound {

void Tolerances::validate() const {
  if (!(rank_rel > 0 && psd_rel > 0 && cert_rel > 0 && residual > 0))
    throw InvalidInput("tolerances must all be positive");
}

SymMatrix SymMatrix::identity(std::size_t n) {
  return SymMatrix(Eigen::MatrixXd::Identity(index(n), index(n)));
}

SymMatrix SymMatrix::ones(std::size_t n) { return SymMatrix(Eigen::MatrixXd::Ones(index(n), index(n))); }

SymMatrix SymMatrix::diagonal(const Vector& d) { return SymMatrix(Eigen::MatrixXd(d.asDiagonal())); }

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& a, double symmetry_tol) {
  if (a.rows() != a.cols())
    throw InvalidInput("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", not square");
  Eigen::MatrixXd s = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      if (!std::isfinite(a(i, j)) || !std::isfinite(a(j, i)))
        throw InvalidInput("matrix has a non-finite entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (std::abs(a(i, j) - a(j, i)) > symmetry_tol)
        throw InvalidInput("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      s(j, i) = s(i, j);
    }
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (!std::isfinite(a(i, i))) throw InvalidInput("matrix has a non-finite diagonal entry");
  return SymMatrix(std::move(s));
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  a_(index(i), index(j)) = value;
  a_(index(j), index(i)) = value;
}

double SymMatrix::norm_inf() const {
  if (a_.size() == 0) return 0.0;
  return a_.cwiseAbs().rowwise().sum().maxCoeff();
}

double SymMatrix::max_abs() const {
  if (a_.size() == 0) return 0.0;
  return a_.cwiseAbs().maxCoeff();
}

SymMatrix SymMatrix::shifted(double s) const {
  Eigen::MatrixXd b = a_;
  b.diagonal().array() += s;
  return SymMatrix(std::move(b));
}

SymMatrix SymMatrix::scaled(double s) const { return SymMatrix(Eigen::MatrixXd(a_ * s)); }

SymMatrix SymMatrix::operator+(const SymMatrix& b) const {
  if (dim() != b.dim()) throw InvalidInput("matrix dimensions differ");
  return SymMatrix(Eigen::MatrixXd(a_ + b.a_));
}

SymMatrix SymMatrix::operator-(const SymMatrix& b) const {
  if (dim() != b.dim()) throw InvalidInput("matrix dimensions differ");
  return SymMatrix(Eigen::MatrixXd(a_ - b.a_));
}

double Spectrum::max_abs() const {
  if (values.size() == 0) return 0.0;
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

std::size_t Spectrum::rank() const {
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (!is_zero(i)) ++r;
  return r;
}

double norm_inf(const Vector& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); }

bool dense_eigen(const Eigen::MatrixXd& a, Vector& values, Eigen::MatrixXd* vectors) {
  const auto n = a.rows();
  const int options = vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, options);
  if (solver.info() == Eigen::Success) {
    values = solver.eigenvalues();
    if (vectors) *vectors = solver.eigenvectors();
    return true;
  }
  const double shift = a.cwiseAbs().maxCoeff() + 1.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::PermutationMatrix<Eigen::Dynamic> p(n);
    Eigen::Index stride = attempt < 2 ? 1 : n / 2 + 1;
    while (std::gcd(stride, n) != 1) ++stride;
    for (Eigen::Index i = 0; i < n; ++i) p.indices()(i) = static_cast<int>(attempt % 2 ? n - 1 - (i * stride) % n : (i * stride) % n);
    const double s = attempt == 0 ? shift : 0.0;
    Eigen::MatrixXd b = p * a * p.transpose();
    b.diagonal().array() += s;
    solver.compute(b, options);
    if (solver.info() != Eigen::Success) continue;
    values = solver.eigenvalues().array() - s;
    if (vectors) *vectors = p.transpose() * solver.eigenvectors();
    return true;
  }
  return false;
}

Spectrum sym_eigen(const SymMatrix& m, const Tolerances& tol) {
  const auto n = m.dim();
  Spectrum s;
  if (n == 0) {
    s.values = Vector(0);
    s.vectors = Eigen::MatrixXd(0, 0);
    return s;
  }
  if (!m.dense().allFinite()) throw InvalidInput("matrix has non-finite entries");
  if (!dense_eigen(m.dense(), s.values, &s.vectors)) throw NumericalError("symmetric eigensolver did not converge");
  s.rank_tol = tol.rank_cutoff(n, s.max_abs());

  const double scale = 1.0 + m.norm_inf();
  const Eigen::MatrixXd residual = m.dense() * s.vectors - s.vectors * s.values.asDiagonal();
  if (residual.cwiseAbs().maxCoeff() > tol.residual * scale)
    throw NumericalError("eigen-pair residual above tolerance");
  const Eigen::MatrixXd gram = s.vectors.transpose() * s.vectors - Eigen::MatrixXd::Identity(s.vectors.cols(), s.vectors.cols());
  if (gram.cwiseAbs().maxCoeff() > tol.residual * static_cast<double>(n))
    throw NumericalError("eigenvectors are not orthonormal to tolerance");
  return s;
}

SymMatrix group_inverse(const Spectrum& spectrum) {
  const auto n = spectrum.dim();
  Vector inv(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    inv(i) = spectrum.is_zero(i) ? 0.0 : 1.0 / spectrum.values(i);
  const Eigen::MatrixXd x = spectrum.vectors * inv.asDiagonal() * spectrum.vectors.transpose();
  return SymMatrix::from_dense(0.5 * (x + x.transpose()), 1e300);
}

SymMatrix group_inverse(const SymMatrix& m, const Tolerances& tol) { return group_inverse(sym_eigen(m, tol)); }

RectMatrix pseudo_inverse(const RectMatrix& a, const Tolerances& tol) {
  const Eigen::MatrixXd gram = a.transpose() * a;
  const auto gram_sym = SymMatrix::from_dense(0.5 * (gram + gram.transpose()), 1e300);
  return group_inverse(gram_sym, tol).dense() * a.transpose();
}

bool in_range(const SymMatrix& m, const SymMatrix& group_inv, const Vector& x, const Tolerances& tol) {
  if (static_cast<std::size_t>(x.size()) != m.dim()) throw InvalidInput("vector length does not match matrix");
  const Vector back = m.dense() * (group_inv.dense() * x);
  return norm_inf(back - x) <= tol.cert_rel * (1.0 + norm_inf(x));
}

bool in_range(const SymMatrix& m, const Vector& x, const Tolerances& tol) {
  return in_range(m, group_inverse(m, tol), x, tol);
}

bool is_psd(const Spectrum& spectrum, const Tolerances& tol) {
  if (spectrum.dim() == 0) return true;
  return spectrum.min() >= -tol.psd_rel * std::max(1.0, spectrum.max());
}

bool is_psd(const SymMatrix& m, const Tolerances& tol) { return is_psd(sym_eigen(m, tol), tol); }

SymMatrix kron(const SymMatrix& a, const SymMatrix& b, std::size_t budget) {
  const auto na = a.dim();
  const auto nb = b.dim();
  if (nb != 0 && na > budget / nb) throw BudgetExceeded("kron: result dimension exceeds the budget");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(na * nb), static_cast<Eigen::Index>(na * nb));
  const auto ia = static_cast<Eigen::Index>(na);
  const auto ib = static_cast<Eigen::Index>(nb);
  for (Eigen::Index i = 0; i < ia; ++i)
    for (Eigen::Index j = 0; j < ia; ++j) out.block(i * ib, j * ib, ib, ib) = a.dense()(i, j) * b.dense();
  return SymMatrix::from_dense(out, 0.0);
}

SymMatrix kron_power(const SymMatrix& m, std::size_t k, std::size_t budget) {
  if (k == 0) throw InvalidInput("kron_power requires k >= 1");
  SymMatrix out = m;
  for (std::size_t i = 1; i < k; ++i) out = kron(out, m, budget);
  return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vector kron_power_vec(const Vector& x, std::size_t k, std::size_t budget) {
  if (k == 0) throw InvalidInput("kron_power_vec requires k >= 1");
  Vector out = x;
  for (std::size_t i = 1; i < k; ++i) {
    if (x.size() != 0 && static_cast<std::size_t>(out.size()) > budget / static_cast<std::size_t>(x.size()))
      throw BudgetExceeded("kron_power_vec: result dimension exceeds the budget");
    out = kron_vec(out, x);
  }
  return out;
}

}  // namespace specbound
