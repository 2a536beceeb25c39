#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/linalg.hpp"

namespace specbound {

inline constexpr std::size_t kDefaultThetaBudget = 256;

/// theta: unit entries on the diagonal and on nonadjacent pairs.
/// theta_prime: those entries only need to be >= 1.
enum class ThetaProgram { theta, theta_prime };
enum class ThetaMethod { smoothed, subgradient };

std::string_view program_name(ThetaProgram p);
std::string_view method_name(ThetaMethod m);

struct SolverOptions {
  std::size_t max_iterations = 5000;
  double tol = 1e-3;
  std::size_t window = 200;
  /// Recorded for reproducibility; both methods are deterministic.
  std::uint64_t seed = 0;
  ThetaMethod method = ThetaMethod::smoothed;
  /// Subgradient: step_t = step0 / sqrt(t + 1), or a Polyak step when target is set.
  double step0 = 1.0;
  std::optional<double> target;
  /// Smoothed: the log-sum-exp temperature is halved every `halving` iterations
  /// until it reaches mu_min.
  std::size_t halving = 100;
  double mu_min = 1e-6;
  std::size_t budget = kDefaultThetaBudget;

  void validate() const;
};

struct ThetaResult {
  ThetaProgram program = ThetaProgram::theta;
  ThetaMethod method = ThetaMethod::smoothed;
  /// lambda_max(best_matrix); an upper bound on the program's optimum.
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  SymMatrix best_matrix;
  /// lambda_max of the iterate evaluated at each iteration.
  std::vector<double> trace;
};

/// Minimises lambda_max(A) over the free entries, starting from J.
ThetaResult lovasz_theta(const Graph& g, const SolverOptions& opts = {});
ThetaResult schrijver_theta(const Graph& g, const SolverOptions& opts = {});
ThetaResult solve_theta(const Graph& g, ThetaProgram program, const SolverOptions& opts = {});

/// Validates the feasibility pattern (to 1e-9) and returns lambda_max(a).
/// Throws InvalidInput naming the offending entry.
double feasible_lambda1(const Graph& g, const SymMatrix& a, ThetaProgram program);

}  // namespace specbound
