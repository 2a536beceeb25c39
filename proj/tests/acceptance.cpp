// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "specbound/bounds.hpp"
#include "specbound/certificates.hpp"
#include "specbound/constructions.hpp"
#include "specbound/graph_matrices.hpp"
#include "specbound/independence.hpp"
#include "specbound/json_io.hpp"
#include "specbound/recipes.hpp"
#include "specbound/theta.hpp"

using namespace specbound;

namespace {

constexpr double kSqrt5 = 2.2360679774997896;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, os.str());
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::string notes_;
};

int failed = 0;

void criterion(int index, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream limit;
  limit.precision(3);
  limit << secs << "s (limit " << limit_seconds << "s)";
  c.expect(secs < limit_seconds, "runtime " + limit.str());
  const bool ok = c.failures().empty();
  if (!ok) ++failed;
  std::printf("%s [%d] %s  %s", ok ? "PASS" : "FAIL", index, title.c_str(), limit.str().c_str());
  if (!c.notes().empty()) std::printf("  | %s", c.notes().c_str());
  std::printf("\n");
  for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
  std::fflush(stdout);
}

bool has(const CertificateReport& r, std::string_view quantity, double value, double tol) {
  for (const auto& c : r.conclusions)
    if (c.quantity == quantity && std::abs(c.value - value) <= tol) return true;
  return false;
}

MatrixVectorPair shifted(const Graph& g, double s) {
  return classify_pair(g, build_matrix(g, MatrixKind::adjacency).shifted(s), ones_vector(g.order()));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (const char* name : {"c5.g6", "petersen.g6", "c4.el", "c5.el", "p5.el", "diamond.el", "k23.el", "k3.el"})
    out.push_back(load_graph(std::string(SPECBOUND_TEST_DATA) + "/" + name));
  out.push_back(join(cycle_graph(4), empty_graph(2)));
  out.push_back(subdivision(load_graph(std::string(SPECBOUND_TEST_DATA) + "/diamond.el")));
  out.push_back(kneser(6, 2));
  out.push_back(hamming_leq(3, 1));
  std::mt19937_64 rng(97);
  for (int i = 0; i < 40; ++i) out.push_back(oracle::random_graph(3 + i % 10, 0.25 + 0.1 * (i % 6), rng));
  return out;
}

std::vector<BuiltPair> recipe_pairs(const Graph& g) {
  std::vector<PairRecipe> recipes;
  const double tau = g.order() == 0 ? 0.0 : oracle::lambda_min(oracle::adjacency(g));
  recipes.emplace_back(ResolventRecipe{-tau + 0.5});
  recipes.emplace_back(ResolventRecipe{std::max(2.0, -tau + 0.1)});
  if (g.regular_degree() && g.size() > 0) recipes.emplace_back(HoffmanRecipe{});
  if (g.size() > 0) recipes.emplace_back(LaplacianRecipe{});
  if (g.min_degree() > 0) {
    recipes.emplace_back(NormalizedRecipe{});
    std::vector<std::vector<std::size_t>> cliques;
    for (const auto& [u, v] : g.edges()) cliques.push_back({u, v});
    recipes.emplace_back(CliqueCoverRecipe{cliques});
  }
  if (g.min_degree() >= 2) recipes.emplace_back(SubdivisionRecipe{});
  recipes.emplace_back(JoinRecipe{g.order() - g.min_degree()});
  std::vector<BuiltPair> out;
  for (const auto& r : recipes) out.push_back(build_pair(g, r));
  return out;
}

}  // namespace

int main() {
  criterion(1, "odd paths: resolvent pair (A+2I, e) certifies alpha = Theta = theta = k+1", 1.0, [](Check& c) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto g = path_graph(2 * k + 1);
      const auto pair = shifted(g, 2.0);
      VertexSet even(g.order());
      for (std::size_t u = 0; u < g.order(); u += 2) even.insert(u);
      const auto r = check_pair_certificate(pair, even);
      const double want = static_cast<double>(k + 1);
      const std::string tag = "P_" + std::to_string(2 * k + 1);
      c.expect(r.verified(), tag + " certificate verified");
      for (const char* q : {"alpha", "theta", "shannon"}) c.expect(has(r, q, want, 0.0), tag + " conclusion " + q);
      c.near(resolvent_bound(g, 2.0).value, want, 1e-9, tag + " 2 e^T (A+2I)^-1 e");
    }
  });

  criterion(2, "Kneser graphs: Hoffman = C(n-1,k-1), star family verifies condition (2), exact alpha agrees", 30.0,
            [](Check& c) {
              const std::vector<std::pair<std::size_t, std::size_t>> cases{{5, 2}, {6, 2}, {7, 2}, {7, 3}};
              for (auto [n, k] : cases) {
                const auto g = kneser(n, k);
                const std::string tag = "K(" + std::to_string(n) + "," + std::to_string(k) + ")";
                const double want = static_cast<double>(binomial(n - 1, k - 1));
                const auto bounds = classical_bounds(g);
                c.near(bounds.front().value, want, 1e-8, tag + " hoffman");
                VertexSet star(g.order());
                for (std::size_t v = 0; v < g.order(); ++v)
                  if (g.label(v).rfind("1,", 0) == 0) star.insert(v);
                c.expect(star.count() == binomial(n - 1, k - 1), tag + " star family size");
                const auto reports = structural_certificates(g, star);
                c.expect(reports[1].verified(), tag + " condition (2) verified");
                c.expect(reports[1].details.at("routes_agree") == 1.0, tag + " condition (2) routes agree");
                c.expect(max_independent_set(g).alpha == star.count(), tag + " exact alpha");
              }
            });

  criterion(3, "C5 squared: Hoffman-shift Kronecker certificate verifies, literal (A+2I, e) is refuted", 5.0,
            [](Check& c) {
              const auto c5 = cycle_graph(5);
              const auto set = VertexSet::of(25, {0, 7, 14, 16, 23});
              const double tau = oracle::lambda_min(oracle::adjacency(c5));
              const auto good = kronecker_certificate(shifted(c5, -tau), 2, set);
              c.expect(good.verified(), "Hoffman-shift certificate verified");
              c.expect(has(good, "alpha", 5.0, 0.0), "alpha(C5^2) = 5");
              c.expect(has(good, "theta", 2.2360679, 1e-7) && has(good, "theta", kSqrt5, 1e-8), "theta(C5) = sqrt 5");
              c.expect(has(good, "shannon", kSqrt5, 1e-8), "Theta(C5) = sqrt 5");
              c.expect(good.details.at("power_identity_rel_err") <= 1e-8, "F power identity");
              c.note("theta numeric " + std::to_string(good.details.at("theta_numeric")));
              const auto bad = kronecker_certificate(shifted(c5, 2.0), 2, set);
              c.expect(!bad.verified(), "(A+2I, e) refuted");
              c.expect(bad.f_value && std::abs(*bad.f_value - 6.25) <= 1e-9, "(A+2I, e) gives F = 6.25");
              bool linear = false;
              for (const auto& f : bad.failures) linear |= f.find("linear condition fails at v = 1 (01)") != std::string::npos;
              c.expect(linear, "linear condition failure reported at vertex (0,1)");
            });

  criterion(4, "Hamming H(6,<=3): alpha = 4 with witness, theta' in [3.9, 4.1], theta in [5.23, 5.44]", 300.0,
            [](Check& c) {
              const auto g = hamming_leq(6, 3);
              const auto mis = max_independent_set(g);
              c.expect(mis.alpha == 4, "exact alpha = 4");
              c.expect(is_independent(g, VertexSet::of(64, {0, 15, 51, 60})), "witness {000000,001111,110011,111100}");
              const auto tp = schrijver_theta(g);
              const auto t = lovasz_theta(g);
              c.expect(tp.value >= 3.9 && tp.value <= 4.1, "theta' = " + std::to_string(tp.value));
              c.expect(t.value >= 5.23 && t.value <= 5.44, "theta = " + std::to_string(t.value));
              c.note("theta' " + std::to_string(tp.value) + ", theta " + std::to_string(t.value));
            });

  criterion(5, "diamond subdivision: edge-vertices verify, alpha = 5, spectral bound strictly larger", 1.0,
            [](Check& c) {
              const auto diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
              const auto built = build_pair(diamond, SubdivisionRecipe{});
              const auto r = check_pair_certificate(built.pair, *built.suggested_c);
              c.expect(r.verified(), "subdivision certificate verified");
              c.expect(built.suggested_c->count() == 5, "five edge-vertices");
              c.expect(max_independent_set(built.pair.graph).alpha == 5, "exact alpha(S(G)) = 5");
              const auto cmp = subdivision_comparison(diamond);
              c.expect(cmp.margin > 1e-6, "margin " + std::to_string(cmp.margin));
              c.note("(m+n) l^2/(4+l^2) = " + std::to_string(cmp.spectral_bound));
            });

  criterion(6, "K2,3 semiregular and C4 join verify; structural (5)/(6) agree with the pair route", 1.0,
            [](Check& c) {
              const auto k23 = complete_bipartite(2, 3);
              const auto sr = build_pair(k23, SemiregularRecipe{k23});
              const auto r = check_pair_certificate(sr.pair, *sr.suggested_c);
              c.expect(r.verified() && has(r, "theta", 3.0, 0.0) && has(r, "shannon", 3.0, 0.0), "K2,3 = 3");
              const auto jn = build_pair(cycle_graph(4), JoinRecipe{2});
              const auto rj = check_pair_certificate(jn.pair, *jn.suggested_c);
              c.expect(rj.verified() && has(rj, "alpha", 2.0, 0.0), "C4 join = 2");
              const auto five = structural_certificates(jn.pair.graph, *jn.suggested_c)[4];
              c.expect(five.verified() && five.details.at("routes_agree") == 1.0, "condition (5) verified and agrees");
              const auto six = structural_certificates(k23, *sr.suggested_c)[5];
              c.expect(six.verified() && six.details.at("routes_agree") == 1.0, "condition (6) verified and agrees");
            });

  criterion(7, "clique cover on K3 = 1; hypergraph matching on C4 = 2 (equality), triangle = 1.5 (strict)", 1.0,
            [](Check& c) {
              c.near(clique_cover_bound(CliqueCover(complete_graph(3), {{0, 1, 2}})).value, 1.0, 1e-9, "K3 clique cover");
              const Hypergraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
              const auto hb = hypergraph_matching_bound(c4);
              c.near(hb.value, 2.0, 1e-9, "C4 hypergraph bound");
              c.expect(hb.inputs.at("equality") == 1.0 && hb.inputs.at("perfect_matching") == 1.0, "C4 equality");
              StructuralAux aux;
              aux.hypergraph = c4;
              const auto eight = structural_certificates(intersection_graph(c4), VertexSet::of(4, {0, 2}), aux)[7];
              c.expect(eight.verified(), "perfect matching certificate verified");
              const auto tri = hypergraph_matching_bound(Hypergraph(3, {{0, 1}, {1, 2}, {2, 0}}));
              c.near(tri.value, 1.5, 1e-9, "triangle hypergraph bound");
              c.expect(tri.inputs.at("matching_number") == 1.0 && tri.inputs.at("equality") == 0.0, "triangle strict");
            });

  criterion(8, "property suites: inverse axioms, soundness, certificates, sandwich, theta matrix, Kronecker", 300.0,
            [](Check& c) {
              std::mt19937_64 rng(101);
              int bad = 0;
              for (int trial = 0; trial < 500; ++trial) {  // (a)
                const auto n = 1 + trial % 12;
                const Eigen::MatrixXd raw = oracle::random_symmetric(n, rng, trial % 2 == 0 ? -1 : trial % n);
                const Eigen::MatrixXd a = 0.5 * (raw + raw.transpose());
                const Eigen::MatrixXd g = group_inverse(SymMatrix::from_dense(a)).dense();
                const double s = (1.0 + a.cwiseAbs().maxCoeff()) * (1.0 + g.cwiseAbs().maxCoeff());
                if ((a * g * a - a).cwiseAbs().maxCoeff() > 1e-8 * s * (1.0 + a.cwiseAbs().maxCoeff()) ||
                    (g * a * g - g).cwiseAbs().maxCoeff() > 1e-8 * s * (1.0 + g.cwiseAbs().maxCoeff()) ||
                    (a * g - g * a).cwiseAbs().maxCoeff() > 1e-8 * s)
                  ++bad;
              }
              c.expect(bad == 0, "(a) inverse axioms failed on " + std::to_string(bad) + " of 500");

              int unsound = 0;
              for (int trial = 0; trial < 200; ++trial) {  // (b)
                const auto g = oracle::random_graph(2 + trial % 9, 0.2 + 0.06 * (trial % 11), rng);
                const double alpha = static_cast<double>(oracle::naive_alpha(g));
                std::vector<BoundReport> reports = classical_bounds(g);
                const double tau = oracle::lambda_min(oracle::adjacency(g));
                if (g.size() > 0) reports.push_back(resolvent_bound(g, -tau + 0.25));
                if (g.is_connected() && g.order() > 1)
                  reports.push_back(
                      perron_bound(g, build_matrix(g, MatrixKind::adjacency).shifted(-tau + 0.1)));
                if (g.regular_degree() && g.size() > 0)
                  reports.push_back(row_sum_bound(g, build_matrix(g, MatrixKind::adjacency).shifted(-tau)));
                for (const auto& built : recipe_pairs(g))
                  if (built.pair.valid() && built.pair.graph.order() == g.order()) reports.push_back(bound_F(built.pair));
                for (const auto& r : reports)
                  if (r.applicable && r.value + 1e-7 < alpha) ++unsound;
              }
              c.expect(unsound == 0, "(b) " + std::to_string(unsound) + " bounds below alpha");

              const auto graphs = corpus();
              int verified = 0;
              int wrong = 0;
              int theta_bad = 0;
              for (const auto& g : graphs) {  // (c), (e)
                for (const auto& built : recipe_pairs(g)) {
                  if (!built.pair.valid()) continue;
                  const auto& h = built.pair.graph;
                  const double lam = oracle::lambda_max(pair_to_theta_matrix(built.pair).dense());
                  if (lam > bound_F(built.pair).value + 1e-7) ++theta_bad;
                  if (h.order() > 40) continue;
                  std::vector<VertexSet> sets{greedy_independent_set(h), max_independent_set(h).witness};
                  if (built.suggested_c) sets.push_back(*built.suggested_c);
                  for (const auto& s : sets) {
                    if (s.empty() || !is_independent(h, s)) continue;
                    const auto r = check_pair_certificate(built.pair, s);
                    if (!r.verified()) continue;
                    ++verified;
                    if (max_independent_set(h).alpha != s.count()) ++wrong;
                  }
                }
                const auto mis = max_independent_set(g);
                if (mis.alpha > 0)
                  for (const auto& r : structural_certificates(g, mis.witness))
                    if (r.verified()) {
                      ++verified;
                      if (r.details.at("routes_agree") != 1.0) ++wrong;
                    }
              }
              c.expect(wrong == 0 && verified > 0,
                       "(c) " + std::to_string(wrong) + " wrong of " + std::to_string(verified) + " verified reports");
              c.expect(theta_bad == 0, "(e) " + std::to_string(theta_bad) + " theta matrices above F");

              int sandwich_bad = 0;
              for (const auto& g : graphs) {  // (d)
                if (g.order() > 12) continue;
                SolverOptions opts;
                const double alpha = static_cast<double>(max_independent_set(g).alpha);
                const double tp = schrijver_theta(g, opts).value;
                const double t = lovasz_theta(g, opts).value;
                if (!(alpha <= tp + opts.tol && tp <= t + 2.0 * opts.tol)) ++sandwich_bad;
              }
              c.expect(sandwich_bad == 0, "(d) sandwich failed on " + std::to_string(sandwich_bad) + " graphs");

              int kron_bad = 0;
              KroneckerOptions quick;
              quick.check_theta = false;
              for (int trial = 0; trial < 50; ++trial) {  // (f)
                const auto g = oracle::random_graph(2 + trial % 5, 0.5, rng);
                const auto rp = oracle::random_pair(g, rng, false);
                const auto pair = classify_pair(g, SymMatrix::from_dense(rp.m), rp.x);
                const auto r = kronecker_certificate(pair, 2, greedy_independent_set(strong_power(g, 2)), quick);
                if (r.details.count("power_identity_rel_err") == 0 || r.details.at("power_identity_rel_err") > 1e-8)
                  ++kron_bad;
              }
              c.expect(kron_bad == 0, "(f) Kronecker identity failed on " + std::to_string(kron_bad) + " of 50");
              c.note(std::to_string(verified) + " verified reports checked");
            });

  std::printf("%s: %d criteria failed\n", failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failed);
  return failed == 0 ? 0 : 1;
}
