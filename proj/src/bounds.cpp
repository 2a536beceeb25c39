#include "specbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specbound/constructions.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph_matrices.hpp"
#include "specbound/independence.hpp"

namespace specbound {

namespace {

constexpr std::size_t kMaxReasonsPerKind = 10;

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void require_valid(const MatrixVectorPair& pair) {
  if (!pair.valid()) {
    std::string msg = "matrix-vector pair is invalid";
    for (const auto& r : pair.reasons) msg += "; " + r;
    throw InvalidInput(msg);
  }
}

BoundReport not_applicable(std::string name, std::string reason) {
  BoundReport r;
  r.name = std::move(name);
  r.applicable = false;
  r.value = std::numeric_limits<double>::quiet_NaN();
  r.reason = std::move(reason);
  return r;
}

void require_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) throw InvalidInput("vertex set " + s.to_string() + " is not independent");
}

}  // namespace

std::string_view pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::in_m: return "InM";
    case PairClass::in_p: return "InP";
    case PairClass::invalid: return "Invalid";
  }
  return "Invalid";
}

double MatrixVectorPair::max_ratio() const { return ratios.size() == 0 ? 0.0 : ratios.maxCoeff(); }

MatrixVectorPair classify_pair(const Graph& g, const SymMatrix& m, const Vector& x, const Tolerances& tol) {
  const auto n = g.order();
  if (m.dim() != n || static_cast<std::size_t>(x.size()) != n)
    throw InvalidInput("pair dimensions (" + std::to_string(m.dim()) + ", " + std::to_string(x.size()) +
                       ") do not match graph order " + std::to_string(n));
  tol.validate();
  MatrixVectorPair p;
  p.graph = g;
  p.m = m;
  p.x = x;
  p.tol = tol;
  p.spectrum = sym_eigen(m, tol);
  p.group_inv = group_inverse(p.spectrum);
  p.quad = x.dot(p.group_inv * x);
  p.ratios = Vector(x.size());
  for (Eigen::Index u = 0; u < x.size(); ++u)
    p.ratios(u) = x(u) == 0.0 ? std::numeric_limits<double>::infinity() : m(u, u) / (x(u) * x(u));

  bool ok = true;
  if (!is_psd(p.spectrum, tol)) {
    ok = false;
    p.reasons.push_back("M is not positive semidefinite: lambda_min = " + num(p.spectrum.min()));
  }
  const double x_max = norm_inf(x);
  std::size_t zero_count = 0;
  for (Eigen::Index u = 0; u < x.size(); ++u)
    if (!(std::abs(x(u)) > 1e-12 * x_max)) {
      ok = false;
      if (zero_count++ < kMaxReasonsPerKind) p.reasons.push_back("x is zero at vertex " + std::to_string(u));
    }
  if (zero_count > kMaxReasonsPerKind)
    p.reasons.push_back("... and " + std::to_string(zero_count - kMaxReasonsPerKind) + " more zero entries");
  if (n > 0 && !in_range(m, p.group_inv, x, tol)) {
    ok = false;
    const Vector back = m * (p.group_inv * x);
    p.reasons.push_back("x is not in the range of M: ||M M^# x - x||_inf = " + num(norm_inf(back - x)));
  }

  const double m_norm = m.norm_inf();
  const double product_slack = tol.cert_rel * m_norm * x_max * x_max;
  const double zero_slack = tol.cert_rel * m_norm;
  bool zero_on_nonedges = true;
  std::size_t sign_count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      const double mij = m(i, j);
      if (std::abs(mij) > zero_slack) zero_on_nonedges = false;
      const double prod = mij * x(static_cast<Eigen::Index>(i)) * x(static_cast<Eigen::Index>(j));
      if (prod > product_slack) {
        ok = false;
        if (sign_count++ < kMaxReasonsPerKind)
          p.reasons.push_back("M_ij x_i x_j = " + num(prod) + " > 0 on nonadjacent pair " + pair_str(i, j));
      }
    }
  if (sign_count > kMaxReasonsPerKind)
    p.reasons.push_back("... and " + std::to_string(sign_count - kMaxReasonsPerKind) + " more positive products");

  if (!ok)
    p.classification = PairClass::invalid;
  else
    p.classification = zero_on_nonedges ? PairClass::in_m : PairClass::in_p;
  return p;
}

bool BoundReport::cross_check_agrees() const {
  if (!cross_check) return true;
  return std::abs(*cross_check - value) <= 1e-7 * std::max(1.0, std::abs(value));
}

BoundReport bound_F(const MatrixVectorPair& pair) {
  require_valid(pair);
  BoundReport r;
  r.name = "F";
  r.value = pair.quad * pair.max_ratio();
  r.inputs = {{"n", static_cast<double>(pair.graph.order())}, {"quad", pair.quad}, {"max_ratio", pair.max_ratio()}};
  r.certificate_hint = "equality iff some independent C has M[C] diagonal, ratio max on C, and c x_v = sum_{u in C} M_vu / x_u off C";
  return r;
}

BoundReport bound_F_S(const MatrixVectorPair& pair, const VertexSet& s) {
  require_valid(pair);
  if (s.empty()) throw InvalidInput("F_S needs a nonempty vertex set");
  require_independent(pair.graph, s);
  double sum = 0.0;
  for (auto u = s.first(); u < s.universe(); u = s.next(u)) sum += pair.ratios(static_cast<Eigen::Index>(u));
  BoundReport r;
  r.name = "F_S";
  const double size = static_cast<double>(s.count());
  r.value = pair.quad / size * sum;
  r.inputs = {{"set_size", size}, {"quad", pair.quad}, {"ratio_sum", sum}};
  r.provenance = "S = " + s.to_string();
  return r;
}

BoundReport bound_F_T(const MatrixVectorPair& pair, std::size_t t, std::string_view t_source) {
  require_valid(pair);
  const auto n = pair.graph.order();
  if (t == 0 || t > n) throw InvalidInput("F_T needs 1 <= t <= n, got t = " + std::to_string(t));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pair.ratios(static_cast<Eigen::Index>(a)) > pair.ratios(static_cast<Eigen::Index>(b));
  });
  double sum = 0.0;
  std::string top;
  for (std::size_t i = 0; i < t; ++i) {
    sum += pair.ratios(static_cast<Eigen::Index>(order[i]));
    top += (i ? "," : "") + std::to_string(order[i]);
  }
  BoundReport r;
  r.name = "F_T";
  r.value = pair.quad / static_cast<double>(t) * sum;
  r.inputs = {{"t", static_cast<double>(t)}, {"quad", pair.quad}, {"ratio_sum", sum}};
  r.provenance = "t from " + std::string(t_source) + "; T = {" + top + "}";
  return r;
}

std::vector<BoundReport> classical_bounds(const Graph& g, const Tolerances& tol) {
  std::vector<BoundReport> out;
  const auto n = g.order();
  if (n == 0) {
    for (const char* name : {"hoffman", "haemers", "laplacian", "normalized_laplacian"})
      out.push_back(not_applicable(name, "empty vertex set"));
    return out;
  }
  const double nd = static_cast<double>(n);
  const auto adjacency = build_matrix(g, MatrixKind::adjacency);
  const auto a_spec = sym_eigen(adjacency, tol);
  const double tau = a_spec.min();
  const double lambda = a_spec.max();
  const double delta = static_cast<double>(g.min_degree());
  const auto ones = ones_vector(n);

  if (const auto k = g.regular_degree(); k && *k != 0) {
    BoundReport r;
    r.name = "hoffman";
    const double kd = static_cast<double>(*k);
    r.value = nd * std::abs(tau) / (kd - tau);
    r.inputs = {{"n", nd}, {"k", kd}, {"tau", tau}};
    r.cross_check = bound_F(classify_pair(g, adjacency.shifted(-tau), ones, tol)).value;
    r.certificate_hint = "equality iff some independent C has every vertex outside C adjacent to exactly |tau| vertices of C";
    out.push_back(std::move(r));
  } else {
    out.push_back(not_applicable("hoffman", g.size() == 0 ? "graph has no edges" : "graph is not regular"));
  }

  if (delta >= 1 && delta * delta - lambda * tau > 0) {
    BoundReport r;
    r.name = "haemers";
    r.value = nd * lambda * std::abs(tau) / (delta * delta - lambda * tau);
    r.inputs = {{"n", nd}, {"delta", delta}, {"lambda", lambda}, {"tau", tau}};
    out.push_back(std::move(r));
  } else {
    out.push_back(not_applicable("haemers", "needs minimum degree >= 1"));
  }

  const auto laplacian = build_matrix(g, MatrixKind::laplacian);
  const double mu = sym_eigen(laplacian, tol).max();
  if (g.size() > 0 && mu > 0) {
    BoundReport r;
    r.name = "laplacian";
    r.value = nd * (mu - delta) / mu;
    r.inputs = {{"n", nd}, {"delta", delta}, {"mu", mu}};
    r.cross_check = bound_F(classify_pair(g, laplacian.scaled(-1.0).shifted(mu), ones, tol)).value;
    r.certificate_hint = "equality iff some independent C has d_u = delta on C and every vertex outside C adjacent to exactly mu - delta vertices of C";
    out.push_back(std::move(r));
  } else {
    out.push_back(not_applicable("laplacian", "largest Laplacian eigenvalue is 0"));
  }

  if (delta > 0) {
    const auto normalized = build_matrix(g, MatrixKind::normalized_laplacian);
    const double nu = sym_eigen(normalized, tol).max();
    const double m = static_cast<double>(g.size());
    BoundReport r;
    r.name = "normalized_laplacian";
    r.value = 2.0 * m * (nu - 1.0) / (nu * delta);
    r.inputs = {{"m", m}, {"delta", delta}, {"mu", nu}};
    Vector root_degrees(static_cast<Eigen::Index>(n));
    for (std::size_t u = 0; u < n; ++u) root_degrees(static_cast<Eigen::Index>(u)) = std::sqrt(static_cast<double>(g.degree(u)));
    r.cross_check = bound_F(classify_pair(g, normalized.scaled(-1.0).shifted(nu), root_degrees, tol)).value;
    r.certificate_hint = "equality iff some independent C has d_u = delta on C and every v outside C adjacent to exactly (mu - 1) d_v vertices of C";
    out.push_back(std::move(r));
  } else {
    out.push_back(not_applicable("normalized_laplacian", "graph has an isolated vertex"));
  }
  return out;
}

BoundReport laplacian_set_bound(const Graph& g, const VertexSet& s, const Tolerances& tol) {
  if (s.empty()) throw InvalidInput("laplacian_set_bound needs a nonempty set");
  require_independent(g, s);
  const auto n = g.order();
  const auto laplacian = build_matrix(g, MatrixKind::laplacian);
  const double mu = sym_eigen(laplacian, tol).max();
  if (!(mu > 0)) throw InvalidInput("laplacian_set_bound: largest Laplacian eigenvalue is 0");
  double degree_sum = 0.0;
  for (auto u = s.first(); u < n; u = s.next(u)) degree_sum += static_cast<double>(g.degree(u));
  const double mean_degree = degree_sum / static_cast<double>(s.count());
  BoundReport r;
  r.name = "laplacian_set";
  r.value = static_cast<double>(n) * (mu - mean_degree) / mu;
  r.inputs = {{"n", static_cast<double>(n)}, {"mu", mu}, {"mean_degree", mean_degree},
              {"set_size", static_cast<double>(s.count())}};
  r.cross_check = bound_F_S(classify_pair(g, laplacian.scaled(-1.0).shifted(mu), ones_vector(n), tol), s).value;
  r.certificate_hint = "equality iff degrees are constant d on S and every vertex outside S is adjacent to exactly mu - d vertices of S";
  r.provenance = "S = " + s.to_string();
  return r;
}

BoundReport resolvent_bound(const Graph& g, double lambda, const Tolerances& tol) {
  if (!(lambda > 0)) throw InvalidInput("resolvent_bound needs lambda > 0");
  const auto n = g.order();
  const auto adjacency = build_matrix(g, MatrixKind::adjacency);
  const double tau = n == 0 ? 0.0 : sym_eigen(adjacency, tol).min();
  if (!(lambda + tau > 0))
    throw InvalidInput("A + lambda I is not positive definite: lambda_min(A) = " + num(tau));
  const auto shifted = adjacency.shifted(lambda);
  const auto ones = ones_vector(n);
  const Eigen::LLT<Eigen::MatrixXd> chol(shifted.dense());
  if (chol.info() != Eigen::Success) throw InvalidInput("A + lambda I is not positive definite (Cholesky failed)");
  BoundReport r;
  r.name = "resolvent";
  r.value = lambda * ones.dot(chol.solve(ones));
  r.inputs = {{"lambda", lambda}, {"tau", tau}, {"n", static_cast<double>(n)}};
  r.cross_check = bound_F(classify_pair(g, shifted, ones, tol)).value;
  r.certificate_hint = "equality iff some independent C has every vertex outside C adjacent to exactly lambda vertices of C";
  return r;
}

BoundReport perron_bound(const Graph& g, const SymMatrix& m, const Tolerances& tol) {
  const auto n = g.order();
  if (m.dim() != n) throw InvalidInput("perron_bound: matrix dimension does not match graph order");
  if (n == 0 || !g.is_connected()) throw InvalidInput("perron_bound needs a connected graph");
  const double slack = tol.cert_rel * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) < -slack) throw InvalidInput("perron_bound: negative diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double mij = m(i, j);
      if (g.adjacent(i, j) && !(mij > slack))
        throw InvalidInput("perron_bound: M_ij must be positive on edge " + pair_str(i, j));
      if (!g.adjacent(i, j) && std::abs(mij) > slack)
        throw InvalidInput("perron_bound: M_ij must vanish on nonadjacent pair " + pair_str(i, j));
    }
  }
  const auto spectrum = sym_eigen(m, tol);
  if (!is_psd(spectrum, tol)) throw InvalidInput("perron_bound: M is not positive semidefinite");
  const double rho = spectrum.max();
  Vector x = spectrum.vectors.col(spectrum.vectors.cols() - 1);
  if (x.sum() < 0) x = -x;
  for (Eigen::Index u = 0; u < x.size(); ++u)
    if (!(x(u) > 0)) throw InvalidInput("perron_bound: Perron vector has a nonpositive entry at " + std::to_string(u));
  double max_ratio = 0.0;
  for (Eigen::Index u = 0; u < x.size(); ++u) max_ratio = std::max(max_ratio, m(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) / (x(u) * x(u)));
  BoundReport r;
  r.name = "perron";
  r.value = max_ratio / rho;
  r.inputs = {{"rho", rho}, {"max_ratio", max_ratio}};
  r.cross_check = bound_F(classify_pair(g, m, x, tol)).value;
  return r;
}

BoundReport laplacian_vector_bound(const Graph& g, const Vector& x, const Tolerances& tol) {
  const auto n = g.order();
  if (static_cast<std::size_t>(x.size()) != n) throw InvalidInput("laplacian_vector_bound: vector length mismatch");
  if (n == 0 || !g.is_connected()) throw InvalidInput("laplacian_vector_bound needs a connected graph");
  const double x_max = norm_inf(x);
  for (Eigen::Index u = 0; u < x.size(); ++u)
    if (!(std::abs(x(u)) > 1e-12 * x_max)) throw InvalidInput("laplacian_vector_bound: x is zero at " + std::to_string(u));
  if (std::abs(x.sum()) > tol.cert_rel * x_max)
    throw InvalidInput("laplacian_vector_bound: entries of x must sum to zero, got " + num(x.sum()));
  auto report = bound_F(classify_pair(g, build_matrix(g, MatrixKind::laplacian), x, tol));
  report.name = "laplacian_vector";
  return report;
}

BoundReport row_sum_bound(const Graph& g, const SymMatrix& m, const Tolerances& tol) {
  const auto n = g.order();
  if (m.dim() != n || n == 0) throw InvalidInput("row_sum_bound: matrix dimension does not match graph order");
  if (!is_psd(m, tol)) throw InvalidInput("row_sum_bound: M is not positive semidefinite");
  const double slack = tol.cert_rel * std::max(1.0, m.norm_inf());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j) && m(i, j) > slack)
        throw InvalidInput("row_sum_bound: M_ij > 0 on nonadjacent pair " + pair_str(i, j));
  const Vector rows = m.dense().rowwise().sum();
  const double r = rows(0);
  const double t = m(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(rows(static_cast<Eigen::Index>(i)) - r) > tol.cert_rel * (1.0 + std::abs(r)))
      throw InvalidInput("row_sum_bound: row " + std::to_string(i) + " sums to " + num(rows(static_cast<Eigen::Index>(i))) +
                         ", expected " + num(r));
    if (std::abs(m(i, i) - t) > tol.cert_rel * (1.0 + std::abs(t)))
      throw InvalidInput("row_sum_bound: diagonal entry " + std::to_string(i) + " differs from " + num(t));
  }
  if (!(r > slack)) throw InvalidInput("row_sum_bound: row sum must be positive, got " + num(r));
  BoundReport out;
  out.name = "row_sum";
  out.value = static_cast<double>(n) * t / r;
  out.inputs = {{"n", static_cast<double>(n)}, {"t", t}, {"r", r}};
  out.cross_check = bound_F(classify_pair(g, m, ones_vector(n), tol)).value;
  out.certificate_hint = "equality iff some independent C has M[C] diagonal and sum_{u in C} M_vu = t for v outside C";
  return out;
}

BoundReport clique_cover_bound(const CliqueCover& c, const Tolerances& tol) {
  const auto& g = c.graph();
  if (g.order() == 0 || g.min_degree() == 0) throw InvalidInput("clique_cover_bound: graph has an isolated vertex");
  const auto cover = clique_cover_matrix(c);
  Vector x(static_cast<Eigen::Index>(g.order()));
  for (std::size_t u = 0; u < g.order(); ++u) x(static_cast<Eigen::Index>(u)) = cover.epsilon_degrees[u];
  auto report = bound_F(classify_pair(g, cover.matrix, x, tol));
  report.name = "clique_cover";
  const RectMatrix b = incidence_matrix(c);
  const Vector e = ones_vector(static_cast<std::size_t>(b.cols()));
  const double projected = e.dot(pseudo_inverse(b, tol) * (b * e));
  report.cross_check = projected * report.inputs["max_ratio"];
  report.inputs["cliques"] = static_cast<double>(c.cliques().size());
  report.certificate_hint = "equality iff some independent C has minimum epsilon-degree on C and meets every clique exactly once";
  return report;
}

BoundReport hypergraph_matching_bound(const Hypergraph& h, const Tolerances& tol) {
  const auto k = h.uniformity();
  if (!k) throw InvalidInput("hypergraph_matching_bound: hypergraph is not uniform");
  if (h.has_isolated_vertex()) throw InvalidInput("hypergraph_matching_bound: hypergraph has an isolated vertex");
  const RectMatrix b = incidence_matrix(h);
  const Eigen::MatrixXd gram = b.transpose() * b;
  const auto omega = intersection_graph(h);
  const auto edges = h.edge_count();
  const auto ones = ones_vector(edges);
  const auto pair = classify_pair(omega, SymMatrix::from_dense(gram), ones, tol);
  BoundReport r = bound_F(pair);
  r.name = "hypergraph_matching";
  const double kd = static_cast<double>(*k);
  const Vector projected = pseudo_inverse(b, tol).transpose() * ones;
  r.cross_check = kd * projected.squaredNorm();
  r.inputs = {{"k", kd}, {"nv", static_cast<double>(h.vertex_count())}, {"edges", static_cast<double>(edges)},
              {"quad", pair.quad}};
  if (edges <= kDefaultAlphaBudget) {
    const auto matching = max_independent_set(omega).alpha;
    const double md = static_cast<double>(matching);
    const bool perfect = matching * *k == h.vertex_count();
    r.inputs["matching_number"] = md;
    r.inputs["perfect_matching"] = perfect ? 1.0 : 0.0;
    r.inputs["equality"] = std::abs(r.value - md) <= 1e-7 * std::max(1.0, r.value) ? 1.0 : 0.0;
  }
  r.certificate_hint = "equality iff H has a perfect matching";
  return r;
}

}  // namespace specbound
