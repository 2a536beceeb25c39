#include "specbound/recipes.hpp"

#include <cmath>
#include <queue>

#include "specbound/constructions.hpp"
#include "specbound/errors.hpp"
#include "specbound/graph_matrices.hpp"

namespace specbound {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Bipartition {
  VertexSet v1;
  VertexSet v2;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
};

// Two-colours each component of h, putting the lower-degree side into V2 (ties:
// the side without the component's lowest vertex), then checks semiregularity.
Bipartition semiregular_bipartition(const Graph& h) {
  const auto n = h.order();
  std::vector<int> side(n, -1);
  Bipartition b{VertexSet(n), VertexSet(n), 0, 0};
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    if (h.degree(root) == 0) throw InvalidInput("semiregular subgraph has isolated vertex " + std::to_string(root));
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    side[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      comp.push_back(u);
      const auto& nb = h.neighbors(u);
      for (auto v = nb.first(); v < n; v = nb.next(v)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          throw InvalidInput("semiregular subgraph is not bipartite (odd cycle through edge " + std::to_string(u) +
                             "-" + std::to_string(v) + ")");
        }
      }
    }
    const auto d0 = h.degree(root);
    const auto d1 = h.degree(h.neighbors(root).first());
    const int small_side = d0 < d1 ? 0 : 1;
    for (auto u : comp) (side[u] == small_side ? b.v2 : b.v1).insert(u);
  }
  auto common_degree = [&](const VertexSet& s, const char* name) {
    std::size_t r = 0;
    for (auto u = s.first(); u < n; u = s.next(u)) {
      if (r == 0) r = h.degree(u);
      if (h.degree(u) != r)
        throw InvalidInput(std::string("semiregular subgraph: degrees differ on class ") + name + " at vertex " +
                           std::to_string(u));
    }
    return r;
  };
  b.r1 = common_degree(b.v1, "V1");
  b.r2 = common_degree(b.v2, "V2");
  return b;
}

Vector to_vector(const std::vector<double>& v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace

std::string recipe_name(const PairRecipe& recipe) {
  return std::visit(Overloaded{
                        [](const ResolventRecipe&) { return std::string("resolvent"); },
                        [](const HoffmanRecipe&) { return std::string("hoffman"); },
                        [](const LaplacianRecipe&) { return std::string("laplacian"); },
                        [](const NormalizedRecipe&) { return std::string("normalized"); },
                        [](const SubdivisionRecipe&) { return std::string("subdivision"); },
                        [](const SemiregularRecipe&) { return std::string("semiregular"); },
                        [](const JoinRecipe&) { return std::string("join"); },
                        [](const CliqueCoverRecipe&) { return std::string("clique_cover"); },
                        [](const HypergraphRecipe&) { return std::string("hypergraph"); },
                        [](const ExplicitRecipe&) { return std::string("explicit"); },
                    },
                    recipe);
}

SymMatrix join_pair_matrix(const Graph& g, const VertexSet& c) {
  const auto n = g.order();
  auto m = build_matrix(g, MatrixKind::adjacency);
  const auto rest = c.complement();
  const double outside = static_cast<double>(rest.count());
  const double s = static_cast<double>(c.count());
  for (std::size_t v = 0; v < n; ++v) {
    if (c.contains(v))
      m.set(v, v, s);
    else
      m.set(v, v, outside - static_cast<double>(g.neighbors(v).intersection_count(rest)));
  }
  return m;
}

BuiltPair build_pair(const Graph& g, const PairRecipe& recipe, const Tolerances& tol) {
  const auto n = g.order();
  return std::visit(
      Overloaded{
          [&](const ResolventRecipe& r) {
            if (!(r.lambda > 0)) throw InvalidInput("resolvent: lambda must be positive");
            const auto a = build_matrix(g, MatrixKind::adjacency);
            const double tau = n == 0 ? 0.0 : sym_eigen(a, tol).min();
            if (!(r.lambda + tau > 0))
              throw InvalidInput("resolvent: A + lambda I is not positive definite (lambda_min(A) = " +
                                 std::to_string(tau) + ")");
            return BuiltPair{classify_pair(g, a.shifted(r.lambda), ones_vector(n), tol), std::nullopt,
                             "(A + " + std::to_string(r.lambda) + " I, e)"};
          },
          [&](const HoffmanRecipe&) {
            if (!g.regular_degree() || g.size() == 0) throw InvalidInput("hoffman: graph must be regular with edges");
            const auto a = build_matrix(g, MatrixKind::adjacency);
            const double tau = sym_eigen(a, tol).min();
            auto built = BuiltPair{classify_pair(g, a.shifted(-tau), ones_vector(n), tol), std::nullopt,
                                   "(A - tau I, e), tau = lambda_min(A)"};
            return built;
          },
          [&](const LaplacianRecipe&) {
            const auto l = build_matrix(g, MatrixKind::laplacian);
            const double mu = n == 0 ? 0.0 : sym_eigen(l, tol).max();
            if (!(mu > 0)) throw InvalidInput("laplacian: largest Laplacian eigenvalue is 0");
            return BuiltPair{classify_pair(g, l.scaled(-1.0).shifted(mu), ones_vector(n), tol), std::nullopt,
                             "(mu I - L, e), mu = lambda_max(L)"};
          },
          [&](const NormalizedRecipe&) {
            if (n == 0 || g.min_degree() == 0) throw InvalidInput("normalized: graph has an isolated vertex");
            const auto l = build_matrix(g, MatrixKind::normalized_laplacian);
            const double mu = sym_eigen(l, tol).max();
            Vector x(static_cast<Eigen::Index>(n));
            for (std::size_t u = 0; u < n; ++u) x(static_cast<Eigen::Index>(u)) = std::sqrt(static_cast<double>(g.degree(u)));
            return BuiltPair{classify_pair(g, l.scaled(-1.0).shifted(mu), x, tol), std::nullopt,
                             "(mu I - normalized L, sqrt(d)), mu = lambda_max"};
          },
          [&](const SubdivisionRecipe&) {
            if (n == 0 || g.min_degree() < 2) throw InvalidInput("subdivision: base graph needs minimum degree >= 2");
            const auto s = subdivision(g);
            const auto q = build_matrix(s, MatrixKind::signless_laplacian);
            Vector x(static_cast<Eigen::Index>(s.order()));
            VertexSet c(s.order());
            for (std::size_t u = 0; u < s.order(); ++u) {
              x(static_cast<Eigen::Index>(u)) = u < n ? static_cast<double>(g.degree(u)) : 2.0;
              if (u >= n) c.insert(u);
            }
            return BuiltPair{classify_pair(s, q, x, tol), c,
                             "signless Laplacian of the subdivision, x = (d; 2e), C = edge-vertices"};
          },
          [&](const SemiregularRecipe& r) {
            if (r.h.order() != n) throw InvalidInput("semiregular: subgraph order differs from the graph order");
            for (const auto& [u, v] : r.h.edges())
              if (!g.adjacent(u, v))
                throw InvalidInput("semiregular: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " is not an edge of the graph");
            const auto b = semiregular_bipartition(r.h);
            auto m = build_matrix(r.h, MatrixKind::adjacency);
            for (std::size_t u = 0; u < n; ++u) m.set(u, u, static_cast<double>(b.v1.contains(u) ? b.r2 : b.r1));
            return BuiltPair{classify_pair(g, m, ones_vector(n), tol), b.v2,
                             "diag(r_2 on V1, r_1 on V2) + A(H), C = V2 (n1 = " + std::to_string(b.v1.count()) +
                                 ", n2 = " + std::to_string(b.v2.count()) + ", r1 = " + std::to_string(b.r1) +
                                 ", r2 = " + std::to_string(b.r2) + ")"};
          },
          [&](const JoinRecipe& r) {
            if (r.s == 0) throw InvalidInput("join: s must be positive");
            if (n > 0 && r.s + g.min_degree() < n)
              throw InvalidInput("join: needs s >= n - delta = " + std::to_string(n - g.min_degree()));
            const auto target = join(g, empty_graph(r.s));
            VertexSet c(target.order());
            for (std::size_t u = n; u < target.order(); ++u) c.insert(u);
            return BuiltPair{classify_pair(target, join_pair_matrix(target, c), ones_vector(target.order()), tol), c,
                             "join with " + std::to_string(r.s) + " independent vertices; M = (nI - L, J; J, sI)"};
          },
          [&](const CliqueCoverRecipe& r) {
            const CliqueCover cover(g, r.cliques);
            if (n == 0 || g.min_degree() == 0) throw InvalidInput("clique_cover: graph has an isolated vertex");
            const auto cm = clique_cover_matrix(cover);
            return BuiltPair{classify_pair(g, cm.matrix, to_vector(cm.epsilon_degrees), tol), std::nullopt,
                             "(A_eps, d^eps) for " + std::to_string(r.cliques.size()) + " cliques"};
          },
          [&](const HypergraphRecipe& r) {
            if (!(intersection_graph(r.h) == g)) throw InvalidInput("hypergraph: graph is not the intersection graph of H");
            const RectMatrix b = incidence_matrix(r.h);
            return BuiltPair{classify_pair(g, SymMatrix::from_dense(b.transpose() * b), ones_vector(n), tol),
                             std::nullopt, "(B^T B, e) on the intersection graph"};
          },
          [&](const ExplicitRecipe& r) {
            return BuiltPair{classify_pair(g, r.m, r.x, tol), std::nullopt, "explicit pair"};
          },
      },
      recipe);
}

}  // namespace specbound
