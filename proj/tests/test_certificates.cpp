#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specbound/bounds.hpp"
#include "specbound/certificates.hpp"
#include "specbound/constructions.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph_matrices.hpp"
#include "specbound/independence.hpp"
#include "specbound/recipes.hpp"

using namespace specbound;

namespace {

constexpr double kGolden = 1.6180339887498949;

MatrixVectorPair shifted_pair(const Graph& g, double s) {
  return classify_pair(g, build_matrix(g, MatrixKind::adjacency).shifted(s), ones_vector(g.order()));
}

bool has_conclusion(const CertificateReport& r, std::string_view quantity, double value) {
  for (const auto& c : r.conclusions)
    if (c.quantity == quantity && std::abs(c.value - value) <= 1e-9 * std::max(1.0, value)) return true;
  return false;
}

VertexSet containing_one(const Graph& kneser_graph) {
  // Vertices whose label starts with "1,".
  VertexSet c(kneser_graph.order());
  for (std::size_t v = 0; v < kneser_graph.order(); ++v)
    if (kneser_graph.label(v).rfind("1,", 0) == 0) c.insert(v);
  return c;
}

VertexSet c5_square_set() {
  VertexSet c(25);
  const std::vector<std::pair<std::size_t, std::size_t>> tuples{{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}};
  for (auto [a, b] : tuples) c.insert(5 * a + b);
  return c;
}

std::vector<VertexSet> maximum_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto mask : oracle::all_maximum_sets(g)) {
    VertexSet s(g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
      if (mask >> u & 1U) s.insert(u);
    out.push_back(s);
  }
  return out;
}

std::vector<PairRecipe> recipes_for(const Graph& g) {
  std::vector<PairRecipe> out;
  const double tau = oracle::lambda_min(oracle::adjacency(g));
  for (double lambda : {1.0, 2.0, 3.0})
    if (lambda + tau > 1e-6) out.emplace_back(ResolventRecipe{lambda});
  if (-tau + 0.5 > 0) out.emplace_back(ResolventRecipe{-tau + 0.5});
  if (g.regular_degree() && g.size() > 0) out.emplace_back(HoffmanRecipe{});
  if (g.size() > 0) out.emplace_back(LaplacianRecipe{});
  if (g.order() > 0 && g.min_degree() > 0) out.emplace_back(NormalizedRecipe{});
  return out;
}

}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("pair certificate examples") {
    const auto c5 = cycle_graph(5);
    const auto hoff = check_pair_certificate(shifted_pair(c5, kGolden), VertexSet::of(5, {0, 2}));
    CHECK_FALSE(hoff.verified());
    CHECK_FALSE(hoff.failures.empty());

    const auto p5 = path_graph(5);
    const auto r = check_pair_certificate(shifted_pair(p5, 2.0), VertexSet::of(5, {0, 2, 4}));
    CHECK(r.verified());
    CHECK(*r.c_value == doctest::Approx(2.0));
    CHECK(r.pair_class == PairClass::in_m);
    CHECK(has_conclusion(r, "alpha", 3.0));
    CHECK(has_conclusion(r, "theta", 3.0));
    CHECK(has_conclusion(r, "shannon", 3.0));

    const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto built = build_pair(diamond, SubdivisionRecipe{});
    REQUIRE(built.suggested_c);
    CHECK(built.suggested_c->count() == 5);
    const auto sub = check_pair_certificate(built.pair, *built.suggested_c);
    CHECK(sub.verified());
    CHECK(*sub.c_value == doctest::Approx(0.5));
    CHECK(has_conclusion(sub, "alpha", 5.0));
    CHECK(max_independent_set(built.pair.graph).alpha == 5);
  }

  TEST_CASE("pair certificate input errors") {
    const auto c5 = cycle_graph(5);
    const auto pair = shifted_pair(c5, 2.0);
    CHECK_THROWS_AS(check_pair_certificate(pair, VertexSet(5)), InvalidInput);
    CHECK_THROWS_AS(check_pair_certificate(pair, VertexSet::of(5, {0, 1})), InvalidInput);
    CHECK_THROWS_AS(check_pair_certificate(pair, VertexSet::of(6, {0})), InvalidInput);
    CHECK_THROWS_AS(check_pair_certificate(shifted_pair(c5, 0.0), VertexSet::of(5, {0})), InvalidInput);
  }

  TEST_CASE("set certificate examples") {
    const auto c4 = cycle_graph(4);
    const auto m = build_matrix(c4, MatrixKind::laplacian).scaled(-1.0).shifted(4.0);
    const auto r = check_set_certificate(classify_pair(c4, m, ones_vector(4)), VertexSet::of(4, {0, 2}));
    CHECK(r.verified());
    CHECK(*r.c_value == doctest::Approx(2.0));
    CHECK(has_conclusion(r, "set_bound", 2.0));
    CHECK_FALSE(has_conclusion(r, "alpha", 2.0));

    const auto k2 = check_set_certificate(shifted_pair(complete_graph(2), 1.0), VertexSet::of(2, {0}));
    CHECK(k2.verified());
    CHECK(*k2.c_value == doctest::Approx(1.0));
    CHECK(*k2.f_value == doctest::Approx(1.0));

    const auto c5 = check_set_certificate(shifted_pair(cycle_graph(5), 2.0), VertexSet::of(5, {0, 2}));
    CHECK_FALSE(c5.verified());
    bool at_four = false;
    for (const auto& f : c5.failures) at_four |= f.find("v = 4") != std::string::npos;
    CHECK(at_four);
  }

  TEST_CASE("recipe examples") {
    const auto petersen = kneser(5, 2);
    const auto hoff = build_pair(petersen, HoffmanRecipe{});
    CHECK(hoff.pair.classification == PairClass::in_m);
    CHECK(hoff.pair.m(0, 0) == doctest::Approx(2.0));
    const auto ekr = containing_one(petersen);
    CHECK(ekr.count() == 4);
    const auto r = check_pair_certificate(hoff.pair, ekr);
    CHECK(r.verified());
    CHECK(has_conclusion(r, "theta", 4.0));

    const auto jn = build_pair(cycle_graph(4), JoinRecipe{2});
    CHECK(jn.pair.graph.order() == 6);
    CHECK(jn.pair.classification == PairClass::in_m);
    REQUIRE(jn.suggested_c);
    CHECK(jn.suggested_c->members() == std::vector<std::size_t>{4, 5});
    CHECK(check_pair_certificate(jn.pair, *jn.suggested_c).verified());
    CHECK_THROWS_AS(build_pair(cycle_graph(4), JoinRecipe{1}), InvalidInput);

    const auto k23 = complete_bipartite(2, 3);
    const auto sr = build_pair(k23, SemiregularRecipe{k23});
    CHECK(sr.pair.classification == PairClass::in_m);
    const Vector me = sr.pair.m * ones_vector(5);
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(me(i) == doctest::Approx(5.0));
    REQUIRE(sr.suggested_c);
    CHECK(sr.suggested_c->count() == 3);
    for (auto u : sr.suggested_c->members()) CHECK(sr.pair.m(u, u) == doctest::Approx(3.0));
    CHECK(check_pair_certificate(sr.pair, *sr.suggested_c).verified());

    CHECK_THROWS_AS(build_pair(path_graph(4), HoffmanRecipe{}), InvalidInput);
    CHECK_THROWS_AS(build_pair(cycle_graph(5), ResolventRecipe{1.0}), InvalidInput);
    CHECK_THROWS_AS(build_pair(path_graph(4), SubdivisionRecipe{}), InvalidInput);
    CHECK_THROWS_AS(build_pair(cycle_graph(5), SemiregularRecipe{cycle_graph(5)}), InvalidInput);
  }

  TEST_CASE("every recipe kind builds a pair in the expected class") {
    const auto c4 = cycle_graph(4);
    const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<std::pair<Graph, PairRecipe>> cases{
        {c4, ResolventRecipe{2.5}},
        {c4, HoffmanRecipe{}},
        {c4, LaplacianRecipe{}},
        {c4, NormalizedRecipe{}},
        {diamond, SubdivisionRecipe{}},
        {complete_bipartite(2, 3), SemiregularRecipe{complete_bipartite(2, 3)}},
        {c4, JoinRecipe{2}},
        {c4, CliqueCoverRecipe{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}}},
        {c4, HypergraphRecipe{Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})}},
    };
    for (const auto& [g, recipe] : cases) {
      const auto built = build_pair(g, recipe);
      CHECK_MESSAGE(built.pair.classification == PairClass::in_m, recipe_name(recipe));
    }
    const auto ex = build_pair(c4, ExplicitRecipe{SymMatrix::identity(4), ones_vector(4)});
    CHECK(ex.pair.valid());
  }

  TEST_CASE("structural condition examples") {
    const auto petersen = kneser(5, 2);
    const auto reports = structural_certificates(petersen, containing_one(petersen));
    REQUIRE(reports.size() == 8);
    CHECK(reports[1].kind == "structural(2)");
    CHECK(reports[1].verified());
    CHECK(has_conclusion(reports[1], "alpha", 4.0));

    const auto p5 = structural_certificates(path_graph(5), VertexSet::of(5, {0, 2, 4}));
    CHECK(p5[0].verified());
    CHECK_FALSE(p5[1].verified());

    const auto jg = join(cycle_graph(4), empty_graph(2));
    const auto j = structural_certificates(jg, VertexSet::of(6, {4, 5}));
    CHECK(j[4].verified());
    CHECK(j[4].details.at("routes_agree") == 1.0);

    // (7) and (8) need their auxiliary structure.
    CHECK_FALSE(p5[6].verified());
    CHECK(p5[6].failures.front().find("not evaluated") != std::string::npos);
    CHECK(p5[7].failures.front().find("not evaluated") != std::string::npos);

    const auto k23 = complete_bipartite(2, 3);
    const auto semi = structural_certificates(k23, VertexSet::of(5, {2, 3, 4}));
    CHECK(semi[5].verified());
    StructuralAux aux;
    aux.semiregular = k23;
    CHECK(structural_certificates(k23, VertexSet::of(5, {2, 3, 4}), aux)[5].verified());

    const auto c4 = cycle_graph(4);
    StructuralAux cover;
    cover.cover = std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const auto seven = structural_certificates(c4, VertexSet::of(4, {0, 2}), cover);
    CHECK(seven[6].verified());
    StructuralAux hyper;
    hyper.hypergraph = Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto omega = intersection_graph(*hyper.hypergraph);
    const auto eight = structural_certificates(omega, VertexSet::of(4, {0, 2}), hyper);
    CHECK(eight[7].verified());
    StructuralAux tri;
    tri.hypergraph = Hypergraph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(structural_certificates(complete_graph(3), VertexSet::of(3, {0}), tri)[7].verified());

    CHECK_THROWS_AS(structural_certificates(c4, VertexSet::of(4, {0, 1})), InvalidInput);
    CHECK_THROWS_AS(structural_certificates(c4, VertexSet(4)), InvalidInput);
  }

  TEST_CASE("structural conditions and pair routes never disagree") {
    std::mt19937_64 rng(61);
    std::vector<Graph> graphs{kneser(5, 2), kneser(6, 2), path_graph(5), cycle_graph(6), complete_bipartite(2, 3),
                              join(cycle_graph(4), empty_graph(2)), hamming_leq(3, 1)};
    for (int i = 0; i < 60; ++i) graphs.push_back(oracle::random_graph(3 + i % 8, 0.5, rng));
    int verified = 0;
    for (const auto& g : graphs) {
      std::vector<VertexSet> sets{greedy_independent_set(g)};
      for (const auto& s : maximum_sets(g)) sets.push_back(s);
      if (sets.size() > 6) sets.resize(6);
      for (const auto& c : sets) {
        if (c.empty()) continue;
        for (const auto& r : structural_certificates(g, c)) {
          CHECK_MESSAGE(r.details.at("routes_agree") == 1.0, r.kind);
          if (r.verified()) {
            ++verified;
            CHECK(max_independent_set(g).alpha == c.count());
          }
        }
      }
    }
    CHECK(verified > 0);
  }

  TEST_CASE("verified certificates are sound") {
    std::mt19937_64 rng(67);
    int verified = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const auto n = 2 + trial % 11;
      auto g = oracle::random_graph(n, 0.3 + 0.05 * (trial % 8), rng);
      if (trial % 5 == 0) g = join(g, empty_graph(1 + trial % 3));
      const auto alpha = max_independent_set(g).alpha;
      std::vector<VertexSet> sets{greedy_independent_set(g), max_independent_set(g).witness};
      for (const auto& recipe : recipes_for(g)) {
        const auto built = build_pair(g, recipe);
        if (!built.pair.valid()) continue;
        for (const auto& c : sets) {
          if (c.empty()) continue;
          const auto r = check_pair_certificate(built.pair, c);
          if (!r.verified()) continue;
          ++verified;
          CHECK(alpha == c.count());
          CHECK(std::abs(bound_F(built.pair).value - static_cast<double>(c.count())) <= 1e-6);
        }
      }
    }
    // Subdivisions and joins verify by construction; include them in the sweep.
    for (int trial = 0; trial < 40; ++trial) {
      auto base = oracle::random_graph(4 + trial % 5, 0.7, rng);
      if (base.min_degree() >= 2) {
        const auto built = build_pair(base, SubdivisionRecipe{});
        const auto r = check_pair_certificate(built.pair, *built.suggested_c);
        if (r.verified()) {
          ++verified;
          CHECK(max_independent_set(built.pair.graph).alpha == built.suggested_c->count());
        }
      }
      const auto s = base.order() - base.min_degree() + trial % 2;
      const auto jn = build_pair(base, JoinRecipe{s});
      const auto r = check_pair_certificate(jn.pair, *jn.suggested_c);
      CHECK(r.verified());
      CHECK(max_independent_set(jn.pair.graph).alpha == jn.suggested_c->count());
      verified += r.verified() ? 1 : 0;
    }
    CHECK(verified >= 40);
  }

  TEST_CASE("equality in F implies a certifying maximum independent set") {
    std::mt19937_64 rng(71);
    int equality_cases = 0;
    std::vector<Graph> graphs{cycle_graph(4), path_graph(5), kneser(5, 2), complete_bipartite(3, 3),
                              complete_graph(4), empty_graph(3), join(cycle_graph(4), empty_graph(2))};
    for (int i = 0; i < 300; ++i) graphs.push_back(oracle::random_graph(2 + i % 7, 0.2 + 0.1 * (i % 7), rng));
    for (const auto& g : graphs) {
      const auto alpha = static_cast<double>(max_independent_set(g).alpha);
      for (const auto& recipe : recipes_for(g)) {
        const auto built = build_pair(g, recipe);
        if (!built.pair.valid()) continue;
        if (std::abs(bound_F(built.pair).value - alpha) > 1e-6) continue;
        ++equality_cases;
        bool found = false;
        for (const auto& c : maximum_sets(g)) found = found || check_pair_certificate(built.pair, c).verified();
        CHECK_MESSAGE(found, recipe_name(recipe) << " on n = " << g.order());
      }
    }
    CHECK(equality_cases >= 10);
  }

  TEST_CASE("Kronecker certificate examples") {
    const auto c5 = cycle_graph(5);
    const auto c = c5_square_set();
    KroneckerOptions quick;
    quick.check_theta = false;
    const auto good = kronecker_certificate(shifted_pair(c5, kGolden), 2, c, quick);
    CHECK(good.verified());
    CHECK(has_conclusion(good, "alpha", 5.0));
    CHECK(has_conclusion(good, "theta", std::sqrt(5.0)));
    CHECK(has_conclusion(good, "shannon", std::sqrt(5.0)));
    CHECK(good.details.at("power_identity_rel_err") <= 1e-8);

    const auto bad = kronecker_certificate(shifted_pair(c5, 2.0), 2, c, quick);
    CHECK_FALSE(bad.verified());
    CHECK(*bad.f_value == doctest::Approx(6.25));
    bool at_01 = false;
    for (const auto& f : bad.failures) at_01 |= f.find("v = 1 (01)") != std::string::npos;
    CHECK(at_01);

    const auto p5 = shifted_pair(path_graph(5), 2.0);
    const auto c1 = VertexSet::of(5, {0, 2, 4});
    const auto k1 = kronecker_certificate(p5, 1, c1, quick);
    const auto direct = check_pair_certificate(p5, c1);
    CHECK(k1.verified() == direct.verified());
    CHECK(*k1.f_value == doctest::Approx(*direct.f_value));

    const auto with_theta = kronecker_certificate(shifted_pair(c5, kGolden), 2, c);
    CHECK(with_theta.details.at("theta_numeric") == doctest::Approx(std::sqrt(5.0)).epsilon(1e-3));

    CHECK_THROWS_AS(kronecker_certificate(p5, 0, c1, quick), InvalidInput);
    CHECK_THROWS_AS(kronecker_certificate(p5, 6, c1, quick), BudgetExceeded);
    const auto inp = classify_pair(empty_graph(2), SymMatrix::from_dense((Eigen::MatrixXd(2, 2) << 2, -1, -1, 2).finished()),
                                   ones_vector(2));
    REQUIRE(inp.classification == PairClass::in_p);
    CHECK_THROWS_AS(kronecker_certificate(inp, 2, VertexSet::of(4, {0}), quick), InvalidInput);
  }

  TEST_CASE("Kronecker identity on random InM pairs") {
    std::mt19937_64 rng(73);
    KroneckerOptions quick;
    quick.check_theta = false;
    for (int trial = 0; trial < 50; ++trial) {
      const auto g = oracle::random_graph(2 + trial % 4, 0.5, rng);
      const auto rp = oracle::random_pair(g, rng, false);
      const auto pair = classify_pair(g, SymMatrix::from_dense(rp.m), rp.x);
      REQUIRE(pair.classification == PairClass::in_m);
      const std::size_t k = 2 + trial % 2;
      const auto power = strong_power(g, k);
      const auto r = kronecker_certificate(pair, k, greedy_independent_set(power), quick);
      CHECK(r.pair_class == PairClass::in_m);
      CHECK(r.details.at("power_identity_rel_err") <= 1e-8);
    }
  }

  TEST_CASE("pair to theta matrix") {
    const auto c5 = cycle_graph(5);
    const auto hoff = shifted_pair(c5, kGolden);
    const auto a = pair_to_theta_matrix(hoff);
    for (std::size_t i = 0; i < 5; ++i) CHECK(a(i, i) == 1.0);
    CHECK(a(0, 2) == doctest::Approx(1.0));
    CHECK(oracle::lambda_max(a.dense()) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(oracle::lambda_max(pair_to_theta_matrix(shifted_pair(c5, 2.0)).dense()) <= 2.5 + 1e-9);
    const auto k2 = pair_to_theta_matrix(shifted_pair(complete_graph(2), 1.0));
    CHECK(oracle::lambda_max(k2.dense()) == doctest::Approx(1.0));
    CHECK_THROWS_AS(pair_to_theta_matrix(shifted_pair(c5, 0.0)), InvalidInput);

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = oracle::random_graph(2 + trial % 9, 0.5, rng);
      const auto rp = oracle::random_pair(g, rng, trial % 2 == 1);
      const auto pair = classify_pair(g, SymMatrix::from_dense(rp.m), rp.x);
      REQUIRE(pair.valid());
      const auto t = pair_to_theta_matrix(pair);
      CHECK(oracle::lambda_max(t.dense()) <= bound_F(pair).value + 1e-7);
      for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j) {
          if (g.adjacent(i, j)) continue;
          if (pair.classification == PairClass::in_m)
            CHECK(t(i, j) == doctest::Approx(1.0).epsilon(1e-9));
          else
            CHECK(t(i, j) >= 1.0 - 1e-9);
        }
    }
  }

  TEST_CASE("subdivision spectral comparison") {
    const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto cmp = subdivision_comparison(diamond);
    CHECK(cmp.edges == 5);
    CHECK(cmp.order == 4);
    const double lam = oracle::lambda_max(oracle::adjacency(subdivision(diamond)));
    CHECK(cmp.lambda == doctest::Approx(lam));
    CHECK(cmp.spectral_bound == doctest::Approx(9.0 * lam * lam / (4.0 + lam * lam)));
    CHECK(cmp.margin > 1e-6);
  }
}
