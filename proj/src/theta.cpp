#include "specbound/theta.hpp"

#include <cmath>
#include <sstream>

#include "specbound/errors.hpp"

namespace specbound {

std::string_view program_name(ThetaProgram p) { return p == ThetaProgram::theta ? "theta" : "theta_prime"; }
std::string_view method_name(ThetaMethod m) { return m == ThetaMethod::smoothed ? "smoothed" : "subgradient"; }

void SolverOptions::validate() const {
  if (max_iterations == 0 || window == 0 || halving == 0 || budget == 0)
    throw InvalidInput("solver options: iteration counts must be positive");
  if (!(tol > 0) || !(step0 > 0) || !(mu_min > 0)) throw InvalidInput("solver options: tolerances must be positive");
}

namespace {

using Eigen::MatrixXd;

struct Pattern {
  // free(i,j) = 1 where the entry may move; clamped(i,j) = 1 where it must stay >= 1.
  MatrixXd free;
  MatrixXd clamped;
};

Pattern make_pattern(const Graph& g, ThetaProgram program) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Pattern p{MatrixXd::Zero(n, n), MatrixXd::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool edge = i != j && g.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (edge) {
        p.free(i, j) = 1.0;
      } else if (program == ThetaProgram::theta_prime) {
        p.free(i, j) = 1.0;
        p.clamped(i, j) = 1.0;
      }
    }
  return p;
}

void project(MatrixXd& x, const Pattern& p) {
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (p.clamped(i, j) != 0.0 && x(i, j) < 1.0) x(i, j) = 1.0;
}

double lambda_max(const MatrixXd& x) {
  Vector w;
  if (!dense_eigen(x, w, nullptr)) throw NumericalError("eigensolver failed inside the theta solver");
  return w(w.size() - 1);
}

struct Eval {
  double smooth = 0.0;
  double top = 0.0;
  MatrixXd grad;
};

// mu log sum exp(lambda_i / mu) and its gradient, restricted to the free entries.
Eval smoothed_eval(const MatrixXd& x, double mu, const Pattern& p) {
  Vector w;
  MatrixXd u;
  if (!dense_eigen(x, w, &u)) throw NumericalError("eigensolver failed inside the theta solver");
  const double top = w(w.size() - 1);
  Eigen::VectorXd z = ((w.array() - top) / mu).exp();
  const double s = z.sum();
  z /= s;
  Eval e;
  e.top = top;
  e.smooth = top + mu * std::log(s);
  e.grad = (u * z.asDiagonal() * u.transpose()).cwiseProduct(p.free);
  return e;
}

Eval subgradient_eval(const MatrixXd& x, const Pattern& p) {
  Vector w;
  MatrixXd u;
  if (!dense_eigen(x, w, &u)) throw NumericalError("eigensolver failed inside the theta solver");
  const auto last = x.rows() - 1;
  const Eigen::VectorXd v = u.col(last);
  Eval e;
  e.top = w(last);
  e.smooth = e.top;
  e.grad = (v * v.transpose()).cwiseProduct(p.free);
  return e;
}

class Progress {
 public:
  Progress(double start, const MatrixXd& x) : best_(start), best_x_(x) {}

  void offer(double value, const MatrixXd& x) {
    if (value < best_) {
      best_ = value;
      best_x_ = x;
    }
  }
  void close_iteration(double value) {
    trace_.push_back(value);
    history_.push_back(best_);
  }
  bool stalled(std::size_t window, double tol) const {
    if (history_.size() <= window) return false;
    return history_[history_.size() - 1 - window] - best_ < tol;
  }

  double best() const { return best_; }
  const MatrixXd& best_x() const { return best_x_; }
  std::vector<double>& trace() { return trace_; }

 private:
  double best_;
  MatrixXd best_x_;
  std::vector<double> trace_;
  std::vector<double> history_;
};

// Accelerated projected gradient on the log-sum-exp smoothing of lambda_max,
// with backtracking, adaptive restart and a halving temperature.
std::size_t run_smoothed(const Pattern& p, const SolverOptions& opts, Progress& progress, bool& converged) {
  const auto n = p.free.rows();
  MatrixXd x = progress.best_x();
  double mu = std::max(1e-2, progress.best() / (10.0 * std::log(static_cast<double>(n) + 1.0)));
  double lip = 1.0 / mu;
  MatrixXd y = x;
  double t = 1.0;
  double fx = smoothed_eval(x, mu, p).smooth;
  std::size_t since_halving = 0;
  std::size_t it = 0;
  while (it < opts.max_iterations) {
    const Eval ey = smoothed_eval(y, mu, p);
    progress.offer(ey.top, y);
    MatrixXd xn;
    Eval en;
    for (int attempt = 0;; ++attempt) {
      xn = y - ey.grad / lip;
      project(xn, p);
      en = smoothed_eval(xn, mu, p);
      const MatrixXd d = xn - y;
      if (en.smooth <= ey.smooth + ey.grad.cwiseProduct(d).sum() + 0.5 * lip * d.squaredNorm() + 1e-12 || attempt >= 200)
        break;
      lip *= 2.0;
    }
    progress.offer(en.top, xn);
    if (en.smooth > fx) {
      t = 1.0;
      y = x;
    } else {
      const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      y = xn + ((t - 1.0) / tn) * (xn - x);
      x = std::move(xn);
      fx = en.smooth;
      t = tn;
    }
    lip = std::max(0.9 * lip, 1e-8);
    ++it;
    progress.close_iteration(en.top);
    const bool at_floor = mu <= opts.mu_min;
    if (at_floor && progress.stalled(opts.window, opts.tol)) {
      converged = true;
      break;
    }
    if (++since_halving >= opts.halving && !at_floor) {
      mu = std::max(opts.mu_min, 0.5 * mu);
      since_halving = 0;
      t = 1.0;
      y = x;
      fx = smoothed_eval(x, mu, p).smooth;
      lip *= 2.0;
    }
  }
  return it;
}

std::size_t run_subgradient(const Pattern& p, const SolverOptions& opts, Progress& progress, bool& converged) {
  MatrixXd x = progress.best_x();
  std::size_t it = 0;
  while (it < opts.max_iterations) {
    const Eval e = subgradient_eval(x, p);
    progress.offer(e.top, x);
    const double gnorm = e.grad.norm();
    if (gnorm == 0.0) {
      progress.close_iteration(e.top);
      converged = true;
      ++it;
      break;
    }
    double step = opts.step0 / std::sqrt(static_cast<double>(it) + 1.0) / gnorm;
    if (opts.target && e.top > *opts.target) step = (e.top - *opts.target) / (gnorm * gnorm);
    x -= step * e.grad;
    project(x, p);
    ++it;
    progress.close_iteration(e.top);
    if (progress.stalled(opts.window, opts.tol)) {
      converged = true;
      break;
    }
  }
  return it;
}

}  // namespace

ThetaResult solve_theta(const Graph& g, ThetaProgram program, const SolverOptions& opts) {
  opts.validate();
  const auto n = g.order();
  if (n > opts.budget)
    throw BudgetExceeded("theta: " + std::to_string(n) + " vertices exceeds the dense eigen budget " +
                         std::to_string(opts.budget));
  ThetaResult r;
  r.program = program;
  r.method = opts.method;
  const auto nn = static_cast<Eigen::Index>(n);
  const MatrixXd start = MatrixXd::Ones(nn, nn);
  if (n == 0 || g.size() == 0) {
    r.value = static_cast<double>(n);
    r.best_matrix = SymMatrix::ones(n);
    r.converged = true;
    return r;
  }
  const Pattern p = make_pattern(g, program);
  Progress progress(static_cast<double>(n), start);
  bool converged = false;
  r.iterations = opts.method == ThetaMethod::smoothed ? run_smoothed(p, opts, progress, converged)
                                                      : run_subgradient(p, opts, progress, converged);
  r.converged = converged;
  r.trace = std::move(progress.trace());
  const MatrixXd& best = progress.best_x();
  const MatrixXd symmetric = 0.5 * (best + best.transpose());
  r.best_matrix = SymMatrix::from_dense(symmetric);
  r.value = lambda_max(r.best_matrix.dense());
  return r;
}

ThetaResult lovasz_theta(const Graph& g, const SolverOptions& opts) { return solve_theta(g, ThetaProgram::theta, opts); }
ThetaResult schrijver_theta(const Graph& g, const SolverOptions& opts) {
  return solve_theta(g, ThetaProgram::theta_prime, opts);
}

double feasible_lambda1(const Graph& g, const SymMatrix& a, ThetaProgram program) {
  const auto n = g.order();
  if (a.dim() != n) throw InvalidInput("feasible_lambda1: matrix dimension does not match graph order");
  constexpr double slack = 1e-9;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i != j && g.adjacent(i, j)) continue;
      const double v = a(i, j);
      const bool ok = program == ThetaProgram::theta ? std::abs(v - 1.0) <= slack : v >= 1.0 - slack;
      if (!ok) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << v << " violates the " << program_name(program)
           << " pattern (" << (program == ThetaProgram::theta ? "must equal 1" : "must be >= 1") << ")";
        throw InvalidInput(os.str());
      }
    }
  if (n == 0) return 0.0;
  return lambda_max(a.dense());
}

}  // namespace specbound
