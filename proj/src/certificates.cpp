#include "specbound/certificates.hpp"

#include <cmath>
#include <sstream>

#include "specbound/constructions.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph_matrices.hpp"
#include "specbound/independence.hpp"
#include "specbound/theta.hpp"

namespace specbound {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string vertex_name(const Graph& g, std::size_t v) {
  if (g.labels().empty()) return std::to_string(v);
  return std::to_string(v) + " (" + g.label(v) + ")";
}

void check_set_inputs(const MatrixVectorPair& pair, const VertexSet& c) {
  if (!pair.valid()) {
    std::string msg = "certificate needs a valid pair";
    for (const auto& r : pair.reasons) msg += "; " + r;
    throw InvalidInput(msg);
  }
  if (c.universe() != pair.graph.order())
    throw InvalidInput("vertex set universe " + std::to_string(c.universe()) + " does not match graph order " +
                       std::to_string(pair.graph.order()));
  if (c.empty()) throw InvalidInput("certificate set must be nonempty");
  if (!is_independent(pair.graph, c)) throw InvalidInput("certificate set " + c.to_string() + " is not independent");
}

void add_condition(CertificateReport& r, std::string name, std::vector<std::string> failures, std::string ok_detail) {
  ConditionCheck check;
  check.name = std::move(name);
  check.passed = failures.empty();
  check.detail = check.passed ? std::move(ok_detail) : failures.front();
  r.conditions.push_back(check);
  for (auto& f : failures) r.failures.push_back(std::move(f));
}

void finish(CertificateReport& r) {
  bool ok = true;
  for (const auto& c : r.conditions) ok = ok && c.passed;
  r.verdict = ok ? Verdict::verified : Verdict::refuted;
}

// Conditions shared by the F and F_S equality checks, evaluated against the common ratio c.
void check_equality_conditions(CertificateReport& r, const MatrixVectorPair& pair, const VertexSet& c_set, double c,
                               bool c_is_max) {
  const auto& g = pair.graph;
  const auto n = g.order();
  const auto& m = pair.m;
  const auto& tol = pair.tol;
  const double m_norm = m.norm_inf();
  const double x_max = norm_inf(pair.x);
  const auto members = c_set.members();

  std::vector<std::string> diag_fail;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const double v = m(members[a], members[b]);
      if (std::abs(v) > tol.cert_rel * m_norm)
        diag_fail.push_back("M[C] not diagonal: M(" + vertex_name(g, members[a]) + ", " + vertex_name(g, members[b]) +
                            ") = " + num(v));
    }
  add_condition(r, "M[C] diagonal", std::move(diag_fail), "all off-diagonal entries of M[C] vanish");

  std::vector<std::string> ratio_fail;
  for (auto u : members) {
    const double ratio = pair.ratios(static_cast<Eigen::Index>(u));
    if (std::abs(ratio - c) > tol.cert_rel * (1.0 + std::abs(c)))
      ratio_fail.push_back("ratio at " + vertex_name(g, u) + " is " + num(ratio) + ", expected c = " + num(c) +
                           (c_is_max ? " (global maximum)" : ""));
  }
  add_condition(r, c_is_max ? "ratios on C equal the maximum c" : "ratios constant on S", std::move(ratio_fail),
                "M_uu / x_u^2 = " + num(c) + " on the set");

  std::vector<std::string> linear_fail;
  const double slack = tol.cert_rel * (1.0 + std::abs(c) * x_max);
  for (std::size_t v = 0; v < n; ++v) {
    if (c_set.contains(v)) continue;
    double sum = 0.0;
    for (auto u : members) sum += m(v, u) / pair.x(static_cast<Eigen::Index>(u));
    const double lhs = c * pair.x(static_cast<Eigen::Index>(v));
    if (std::abs(lhs - sum) > slack)
      linear_fail.push_back("linear condition fails at v = " + vertex_name(g, v) + ": c x_v = " + num(lhs) +
                            ", sum_{u in C} M_vu / x_u = " + num(sum));
  }
  add_condition(r, "c x_v = sum_{u in C} M_vu / x_u off the set", std::move(linear_fail),
                "holds at every vertex outside the set");
}

std::string join_ints(const VertexSet& s) {
  std::string out;
  for (auto v : s.members()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) { return v == Verdict::verified ? "Verified" : "Refuted"; }

CertificateReport check_pair_certificate(const MatrixVectorPair& pair, const VertexSet& c_set) {
  check_set_inputs(pair, c_set);
  CertificateReport r;
  r.kind = "pair";
  r.pair_class = pair.classification;
  r.witness = c_set;
  const double c = pair.max_ratio();
  r.c_value = c;
  const double f = pair.quad * c;
  r.f_value = f;
  check_equality_conditions(r, pair, c_set, c, true);
  const double size = static_cast<double>(c_set.count());
  std::vector<std::string> f_fail;
  if (std::abs(f - size) > 1e-6 * std::max(1.0, size))
    f_fail.push_back("F = " + num(f) + " differs from |C| = " + std::to_string(c_set.count()));
  add_condition(r, "F(M,x) = |C|", std::move(f_fail), "F = " + num(f));
  finish(r);
  r.details["set_size"] = size;
  if (r.verified()) {
    const std::string k = std::to_string(c_set.count());
    r.conclusions.push_back({"alpha", size, "alpha(G) = " + k});
    if (pair.classification == PairClass::in_m) {
      r.conclusions.push_back({"theta", size, "theta(G) = " + k});
      r.conclusions.push_back({"shannon", size, "Theta(G) = " + k});
    } else {
      r.conclusions.push_back({"theta_prime", size, "theta'(G) = " + k});
    }
  }
  return r;
}

CertificateReport check_set_certificate(const MatrixVectorPair& pair, const VertexSet& s) {
  check_set_inputs(pair, s);
  CertificateReport r;
  r.kind = "set";
  r.pair_class = pair.classification;
  r.witness = s;
  const double c = pair.ratios(static_cast<Eigen::Index>(s.first()));
  r.c_value = c;
  const double size = static_cast<double>(s.count());
  check_equality_conditions(r, pair, s, c, false);
  double ratio_sum = 0.0;
  for (auto u : s.members()) ratio_sum += pair.ratios(static_cast<Eigen::Index>(u));
  r.f_value = pair.quad / size * ratio_sum;
  std::vector<std::string> f_fail;
  if (std::abs(*r.f_value - size) > 1e-6 * std::max(1.0, size))
    f_fail.push_back("F_S = " + num(*r.f_value) + " differs from |S| = " + std::to_string(s.count()));
  add_condition(r, "F_S(M,x) = |S|", std::move(f_fail), "F_S = " + num(*r.f_value));
  finish(r);
  r.details["set_size"] = size;
  if (r.verified()) r.conclusions.push_back({"set_bound", size, "|S| = F_S(M,x) = " + std::to_string(s.count())});
  return r;
}

namespace {

struct PairRoute {
  bool built = false;
  bool verified = false;
  std::string note;
};

PairRoute run_pair_route(const Graph& g, const PairRecipe& recipe, const VertexSet& c, const Tolerances& tol) {
  PairRoute route;
  try {
    const auto built = build_pair(g, recipe, tol);
    route.built = true;
    route.note = "pair route: " + built.description;
    if (!built.pair.valid()) {
      route.note += " (pair invalid: " + (built.pair.reasons.empty() ? std::string("?") : built.pair.reasons.front()) + ")";
      return route;
    }
    const auto report = check_pair_certificate(built.pair, c);
    route.verified = report.verified();
    if (!route.verified && !report.failures.empty()) route.note += " (" + report.failures.front() + ")";
  } catch (const InvalidInput& e) {
    route.note = std::string("pair route not built: ") + e.what();
  }
  return route;
}

CertificateReport structural_report(const Graph& g, const VertexSet& c, int index, std::vector<std::string> failures,
                                    std::string ok_detail, const std::optional<PairRecipe>& recipe,
                                    const Tolerances& tol) {
  CertificateReport r;
  r.kind = "structural(" + std::to_string(index) + ")";
  r.witness = c;
  add_condition(r, "condition (" + std::to_string(index) + ")", std::move(failures), std::move(ok_detail));
  const bool structural_ok = r.conditions.back().passed;
  if (recipe) {
    const auto route = run_pair_route(g, *recipe, c, tol);
    r.notes.push_back(route.note);
    r.details["pair_route_built"] = route.built ? 1.0 : 0.0;
    r.details["pair_route_verified"] = route.verified ? 1.0 : 0.0;
    const bool agree = route.verified == structural_ok;
    r.details["routes_agree"] = agree ? 1.0 : 0.0;
    if (!agree)
      add_condition(r, "pair route agrees", {"structural check and pair route disagree"}, "");
  } else {
    r.details["pair_route_built"] = 0.0;
    r.details["routes_agree"] = structural_ok ? 0.0 : 1.0;
    if (structural_ok) add_condition(r, "pair route agrees", {"no pair route could be built"}, "");
  }
  finish(r);
  if (r.verified()) {
    r.pair_class = PairClass::in_m;
    const double size = static_cast<double>(c.count());
    const std::string k = std::to_string(c.count());
    r.conclusions.push_back({"alpha", size, "alpha(G) = " + k});
    r.conclusions.push_back({"theta", size, "theta(G) = " + k});
    r.conclusions.push_back({"shannon", size, "Theta(G) = " + k});
  }
  return r;
}

bool near(double a, double b, double scale, const Tolerances& tol) {
  return std::abs(a - b) <= tol.cert_rel * (1.0 + std::abs(scale));
}

}  // namespace

std::vector<CertificateReport> structural_certificates(const Graph& g, const VertexSet& c, const StructuralAux& aux,
                                                       const Tolerances& tol) {
  const auto n = g.order();
  if (c.universe() != n) throw InvalidInput("vertex set universe does not match graph order");
  if (c.empty()) throw InvalidInput("certificate set must be nonempty");
  if (!is_independent(g, c)) throw InvalidInput("certificate set " + c.to_string() + " is not independent");

  const auto outside = c.complement();
  std::vector<std::size_t> count(n, 0);
  for (auto v : outside.members()) count[v] = g.neighbors(v).intersection_count(c);
  const double tau = sym_eigen(build_matrix(g, MatrixKind::adjacency), tol).min();
  const auto delta = g.min_degree();
  std::vector<CertificateReport> out;

  {  // (1)
    std::vector<std::string> fail;
    double lambda = std::floor(std::max(0.0, -tau)) + 1.0;
    if (!outside.empty()) {
      lambda = static_cast<double>(count[outside.first()]);
      for (auto v : outside.members())
        if (count[v] != count[outside.first()])
          fail.push_back("vertex " + vertex_name(g, v) + " has " + std::to_string(count[v]) + " neighbours in C, vertex " +
                         vertex_name(g, outside.first()) + " has " + std::to_string(count[outside.first()]));
      if (fail.empty() && !(lambda + tau > tol.cert_rel * (1.0 + std::abs(tau))))
        fail.push_back("common count " + num(lambda) + " is not above -tau = " + num(-tau));
    }
    // The resolvent pair only exists above -tau; at lambda = -tau it is the Hoffman pair of condition (2).
    std::optional<PairRecipe> recipe;
    if (lambda + tau > tol.cert_rel * (1.0 + std::abs(tau))) recipe = ResolventRecipe{lambda};
    out.push_back(structural_report(g, c, 1, std::move(fail), "every outside vertex has " + num(lambda) +
                                        " neighbours in C, above -tau = " + num(-tau), recipe, tol));
  }
  {  // (2)
    std::vector<std::string> fail;
    if (!g.regular_degree()) fail.push_back("graph is not regular");
    if (!(tau < 0)) fail.push_back("tau = " + num(tau) + " is not negative");
    for (auto v : outside.members())
      if (!near(static_cast<double>(count[v]), -tau, tau, tol)) {
        fail.push_back("vertex " + vertex_name(g, v) + " has " + std::to_string(count[v]) +
                       " neighbours in C, expected -tau = " + num(-tau));
        break;
      }
    std::optional<PairRecipe> recipe;
    if (g.regular_degree() && g.size() > 0) recipe = HoffmanRecipe{};
    out.push_back(structural_report(g, c, 2, std::move(fail),
                                    "regular, every outside vertex has -tau = " + num(-tau) + " neighbours in C",
                                    recipe, tol));
  }
  const double mu = sym_eigen(build_matrix(g, MatrixKind::laplacian), tol).max();
  {  // (3)
    std::vector<std::string> fail;
    if (!(mu > 0)) fail.push_back("largest Laplacian eigenvalue is 0");
    for (auto u : c.members())
      if (g.degree(u) != delta) {
        fail.push_back("d_u = " + std::to_string(g.degree(u)) + " at " + vertex_name(g, u) + ", minimum degree is " +
                       std::to_string(delta));
        break;
      }
    for (auto v : outside.members())
      if (!near(static_cast<double>(count[v]), mu - static_cast<double>(delta), mu, tol)) {
        fail.push_back("vertex " + vertex_name(g, v) + " has " + std::to_string(count[v]) +
                       " neighbours in C, expected mu - delta = " + num(mu - static_cast<double>(delta)));
        break;
      }
    std::optional<PairRecipe> recipe;
    if (mu > 0) recipe = LaplacianRecipe{};
    out.push_back(structural_report(g, c, 3, std::move(fail),
                                    "d = delta on C, outside counts equal mu - delta = " + num(mu - static_cast<double>(delta)),
                                    recipe, tol));
  }
  {  // (4)
    std::vector<std::string> fail;
    std::optional<PairRecipe> recipe;
    if (delta == 0) {
      fail.push_back("minimum degree is 0");
    } else {
      const double nu = sym_eigen(build_matrix(g, MatrixKind::normalized_laplacian), tol).max();
      for (auto u : c.members())
        if (g.degree(u) != delta) {
          fail.push_back("d_u = " + std::to_string(g.degree(u)) + " at " + vertex_name(g, u) + ", minimum degree is " +
                         std::to_string(delta));
          break;
        }
      for (auto v : outside.members()) {
        const double want = (nu - 1.0) * static_cast<double>(g.degree(v));
        if (!near(static_cast<double>(count[v]), want, want, tol)) {
          fail.push_back("vertex " + vertex_name(g, v) + " has " + std::to_string(count[v]) +
                         " neighbours in C, expected (mu - 1) d_v = " + num(want));
          break;
        }
      }
      recipe = NormalizedRecipe{};
    }
    out.push_back(structural_report(g, c, 4, std::move(fail), "d = delta on C, outside counts equal (mu - 1) d_v",
                                    recipe, tol));
  }
  {  // (5)
    std::vector<std::string> fail;
    for (auto v : outside.members())
      if (count[v] != c.count()) {
        fail.push_back("vertex " + vertex_name(g, v) + " misses " + std::to_string(c.count() - count[v]) +
                       " vertices of C");
        break;
      }
    const auto rest = g.induced(outside);
    const std::size_t rest_delta = rest.order() == 0 ? 0 : rest.min_degree();
    if (2 * c.count() + rest_delta < n)
      fail.push_back("2|C| = " + std::to_string(2 * c.count()) + " < n - delta(G - C) = " + std::to_string(n - rest_delta));
    out.push_back(structural_report(g, c, 5, std::move(fail), "outside vertices see all of C and 2|C| >= n - delta(G - C)",
                                    PairRecipe{ExplicitRecipe{join_pair_matrix(g, c), ones_vector(n)}}, tol));
  }
  {  // (6)
    std::vector<std::string> fail;
    Graph h(n);
    if (aux.semiregular) {
      h = *aux.semiregular;
    } else {
      for (auto u : c.members())
        for (auto v : g.neighbors(u).members()) h.add_edge(u, v);
    }
    std::optional<PairRecipe> recipe;
    if (h.order() != n) {
      fail.push_back("subgraph order differs from graph order");
    } else {
      for (const auto& [u, v] : h.edges()) {
        if (!g.adjacent(u, v)) {
          fail.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in G");
          break;
        }
        if (c.contains(u) == c.contains(v)) {
          fail.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " does not cross C");
          break;
        }
      }
      auto constant_degree = [&](const VertexSet& s, const char* side) -> std::size_t {
        const auto r = s.empty() ? 0 : h.degree(s.first());
        for (auto u : s.members())
          if (h.degree(u) != r || r == 0) {
            fail.push_back("degree " + std::to_string(h.degree(u)) + " at " + vertex_name(g, u) + " on the " + side +
                           " side (need a common positive degree)");
            break;
          }
        return r;
      };
      constant_degree(c, "C");
      if (outside.empty()) fail.push_back("C is the whole vertex set");
      constant_degree(outside, "outside");
      if (outside.count() > c.count())
        fail.push_back("C has " + std::to_string(c.count()) + " vertices, fewer than the other side " +
                       std::to_string(outside.count()));
      recipe = SemiregularRecipe{h};
    }
    auto report = structural_report(g, c, 6, std::move(fail), "spanning semiregular bipartite subgraph with C the larger side",
                                    recipe, tol);
    report.notes.push_back(aux.semiregular ? "subgraph supplied" : "subgraph: all edges between C and its complement");
    out.push_back(std::move(report));
  }
  {  // (7)
    std::vector<std::string> fail;
    std::optional<PairRecipe> recipe;
    if (!aux.cover) {
      fail.push_back("not evaluated: no clique cover supplied");
    } else {
      try {
        const CliqueCover cover(g, *aux.cover);
        const auto d = cover.epsilon_degrees();
        const auto dmin = d.empty() ? 0 : *std::min_element(d.begin(), d.end());
        if (dmin == 0) fail.push_back("some vertex lies in no clique");
        for (auto u : c.members())
          if (d[u] != dmin) {
            fail.push_back("epsilon-degree " + std::to_string(d[u]) + " at " + vertex_name(g, u) + ", minimum is " +
                           std::to_string(dmin));
            break;
          }
        for (std::size_t q = 0; q < aux.cover->size(); ++q) {
          std::size_t hits = 0;
          for (auto u : (*aux.cover)[q]) hits += c.contains(u) ? 1 : 0;
          if (hits != 1) {
            fail.push_back("clique " + std::to_string(q) + " meets C in " + std::to_string(hits) + " vertices");
            break;
          }
        }
        recipe = CliqueCoverRecipe{*aux.cover};
      } catch (const InvalidInput& e) {
        fail.push_back(std::string("invalid clique cover: ") + e.what());
      }
    }
    out.push_back(structural_report(g, c, 7, std::move(fail), "C meets every clique once at minimum epsilon-degree",
                                    recipe, tol));
  }
  {  // (8)
    std::vector<std::string> fail;
    std::optional<PairRecipe> recipe;
    if (!aux.hypergraph) {
      fail.push_back("not evaluated: no hypergraph supplied");
    } else {
      const auto& h = *aux.hypergraph;
      if (!h.is_uniform()) fail.push_back("hypergraph is not uniform");
      if (!(intersection_graph(h) == g)) {
        fail.push_back("graph is not the intersection graph of the hypergraph");
      } else {
        VertexSet covered(h.vertex_count());
        for (auto f : c.members()) covered |= h.edge_set(f);
        if (covered.count() != h.vertex_count())
          fail.push_back("C covers " + std::to_string(covered.count()) + " of " + std::to_string(h.vertex_count()) +
                         " hypergraph vertices; not a perfect matching");
        recipe = HypergraphRecipe{h};
      }
    }
    out.push_back(structural_report(g, c, 8, std::move(fail), "C is a perfect matching of the hypergraph", recipe, tol));
  }
  return out;
}

CertificateReport kronecker_certificate(const MatrixVectorPair& pair, std::size_t k, const VertexSet& c_set,
                                        const KroneckerOptions& opts) {
  if (k == 0) throw InvalidInput("kronecker certificate needs k >= 1");
  if (pair.classification != PairClass::in_m)
    throw InvalidInput("kronecker certificate needs a pair in M(G), got " + std::string(pair_class_name(pair.classification)));
  const auto power = strong_power(pair.graph, k, opts.budget);
  const auto m_k = kron_power(pair.m, k, opts.budget);
  const auto x_k = kron_power_vec(pair.x, k, opts.budget);
  const auto power_pair = classify_pair(power, m_k, x_k, pair.tol);

  CertificateReport r;
  r.kind = "kronecker";
  r.witness = c_set;
  r.pair_class = power_pair.classification;
  const double f_base = pair.quad * pair.max_ratio();
  const double f_base_k = std::pow(f_base, static_cast<double>(k));
  r.details["k"] = static_cast<double>(k);
  r.details["f_base"] = f_base;
  r.details["f_base_power"] = f_base_k;

  if (power_pair.classification != PairClass::in_m) {
    add_condition(r, "Kronecker pair in M(G^k)",
                  {"Kronecker pair is " + std::string(pair_class_name(power_pair.classification)) +
                   (power_pair.reasons.empty() ? "" : ": " + power_pair.reasons.front())},
                  "");
    finish(r);
    return r;
  }
  add_condition(r, "Kronecker pair in M(G^k)", {}, "(M^{⊗k}, x^{⊗k}) classified InM on the strong power");
  const double f_power = power_pair.quad * power_pair.max_ratio();
  r.details["f_power"] = f_power;
  const double rel = std::abs(f_power - f_base_k) / std::max(1.0, std::abs(f_base_k));
  r.details["power_identity_rel_err"] = rel;
  std::vector<std::string> identity_fail;
  if (rel > 1e-8) identity_fail.push_back("F(M^{⊗k}, x^{⊗k}) = " + num(f_power) + " but F(M,x)^k = " + num(f_base_k));
  add_condition(r, "F(M^{⊗k}, x^{⊗k}) = F(M,x)^k", std::move(identity_fail), "relative error " + num(rel));

  const auto inner = check_pair_certificate(power_pair, c_set);
  r.c_value = inner.c_value;
  r.f_value = inner.f_value;
  for (const auto& cond : inner.conditions) r.conditions.push_back(cond);
  for (const auto& f : inner.failures) r.failures.push_back(f);
  finish(r);

  if (opts.check_theta && pair.graph.order() <= kDefaultThetaBudget) {
    const auto theta = lovasz_theta(pair.graph);
    r.details["theta_numeric"] = theta.value;
    const bool close = std::abs(theta.value - f_base) <= 1e-2 * std::max(1.0, f_base);
    r.notes.push_back("assumption theta(G) = F(M,x): numerical theta " + num(theta.value) + " vs F " + num(f_base) +
                      (close ? " (consistent)" : " (inconsistent)"));
  }
  if (r.verified()) {
    const double size = static_cast<double>(c_set.count());
    const double root = std::pow(size, 1.0 / static_cast<double>(k));
    const std::string ks = std::to_string(k);
    r.conclusions.push_back({"alpha", size, "alpha(G^" + ks + ") = " + std::to_string(c_set.count())});
    r.conclusions.push_back({"theta", root, "theta(G) = " + std::to_string(c_set.count()) + "^(1/" + ks + ") = " + num(root)});
    r.conclusions.push_back({"shannon", root, "Theta(G) = " + std::to_string(c_set.count()) + "^(1/" + ks + ") = " + num(root)});
  }
  r.notes.push_back("C = {" + join_ints(c_set) + "} in row-major power indices");
  return r;
}

SymMatrix pair_to_theta_matrix(const MatrixVectorPair& pair) {
  if (!pair.valid()) throw InvalidInput("pair_to_theta_matrix needs a valid pair");
  const auto n = pair.graph.order();
  const Vector y = pair.x / std::sqrt(pair.quad);
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, i, 1.0);
    for (std::size_t j = i + 1; j < n; ++j)
      a.set(i, j, 1.0 - pair.m(i, j) / (y(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j))));
  }
  return a;
}

SubdivisionComparison subdivision_comparison(const Graph& base, const Tolerances& tol) {
  const auto s = subdivision(base);
  SubdivisionComparison out;
  out.edges = base.size();
  out.order = base.order();
  out.lambda = s.order() == 0 ? 0.0 : sym_eigen(build_matrix(s, MatrixKind::adjacency), tol).max();
  const double l2 = out.lambda * out.lambda;
  out.spectral_bound = static_cast<double>(out.edges + out.order) * l2 / (4.0 + l2);
  out.margin = out.spectral_bound - static_cast<double>(out.edges);
  return out;
}

}  // namespace specbound
