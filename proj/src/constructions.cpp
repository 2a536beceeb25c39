#include "specbound/constructions.hpp"

#include <bit>
#include <cstdint>
#include <limits>

#include "specbound/errors.hpp"

namespace specbound {

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph complement(const Graph& g) {
  const auto n = g.order();
  Graph h(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph join(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  const auto n2 = g2.order();
  Graph h(n1 + n2);
  for (const auto& [u, v] : g1.edges()) h.add_edge(u, v);
  for (const auto& [u, v] : g2.edges()) h.add_edge(n1 + u, n1 + v);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v) h.add_edge(u, n1 + v);
  return h;
}

Graph subdivision(const Graph& g) {
  const auto n = g.order();
  const auto edges = g.edges();
  Graph h(n + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    h.add_edge(edges[i].first, n + i);
    h.add_edge(edges[i].second, n + i);
  }
  return h;
}

namespace {

// Next bitmask with the same popcount (Gosper's hack); increasing order is colex order.
std::uint64_t next_combination(std::uint64_t x) {
  const auto c = x & (~x + 1);
  const auto r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

Graph kneser(std::size_t n, std::size_t k) {
  if (k == 0 || n < 2 * k) throw InvalidInput("kneser(n, k) requires n >= 2k >= 2");
  if (n > 63) throw BudgetExceeded("kneser: n must be at most 63");
  std::vector<std::uint64_t> subsets;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit; s = next_combination(s)) {
    subsets.push_back(s);
    if (subsets.size() > kDefaultPowerBudget) throw BudgetExceeded("kneser: more than 4096 vertices");
  }
  Graph g(subsets.size());
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::string label;
    for (std::size_t e = 0; e < n; ++e)
      if ((subsets[i] >> e) & 1U) {
        if (!label.empty()) label += ',';
        label += std::to_string(e + 1);
      }
    labels.push_back(std::move(label));
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if ((subsets[i] & subsets[j]) == 0) g.add_edge(i, j);
  }
  g.set_labels(std::move(labels));
  return g;
}

Graph hamming_leq(std::size_t d, std::size_t r) {
  if (d == 0 || r == 0 || r >= d) throw InvalidInput("hamming_leq(d, r) requires 1 <= r < d");
  if (d > 12) throw BudgetExceeded("hamming_leq: d must be at most 12");
  const std::size_t n = std::size_t{1} << d;
  Graph g(n);
  std::vector<std::string> labels(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < d; ++b) labels[u].push_back(((u >> (d - 1 - b)) & 1U) ? '1' : '0');
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto dist = static_cast<std::size_t>(std::popcount(u ^ v));
      if (dist >= 1 && dist <= r) g.add_edge(u, v);
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

std::size_t power_index(std::size_t base_order, std::span<const std::size_t> tuple) {
  std::size_t index = 0;
  for (auto u : tuple) {
    if (u >= base_order) throw InvalidInput("tuple coordinate " + std::to_string(u) + " out of range");
    index = index * base_order + u;
  }
  return index;
}

Graph strong_power(const Graph& g, std::size_t k, std::size_t budget) {
  if (k == 0) throw InvalidInput("strong_power requires k >= 1");
  const auto n = g.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && total > budget / n) throw BudgetExceeded("strong_power: n^k exceeds the vertex budget");
    total *= n;
  }
  if (total > budget) throw BudgetExceeded("strong_power: n^k exceeds the vertex budget");

  // closed[u] = N[u] in the base graph
  std::vector<VertexSet> closed;
  for (std::size_t u = 0; u < n; ++u) {
    auto c = g.neighbors(u);
    c.insert(u);
    closed.push_back(std::move(c));
  }
  Graph h(total);
  std::vector<std::size_t> a(k), b(k);
  const auto decode = [&](std::size_t index, std::vector<std::size_t>& tuple) {
    for (std::size_t i = k; i-- > 0;) {
      tuple[i] = index % n;
      index /= n;
    }
  };
  for (std::size_t x = 0; x < total; ++x) {
    decode(x, a);
    for (std::size_t y = x + 1; y < total; ++y) {
      decode(y, b);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = closed[a[i]].contains(b[i]);
      if (ok) h.add_edge(x, y);
    }
  }
  // Unlabelled bases with at most 10 vertices get digit-string labels such as "12".
  const bool separate = !g.labels().empty() || n > 10;
  std::vector<std::string> labels(total);
  for (std::size_t x = 0; x < total; ++x) {
    decode(x, a);
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0 && separate) labels[x] += '|';
      labels[x] += g.label(a[i]);
    }
  }
  h.set_labels(std::move(labels));
  return h;
}

Graph intersection_graph(const Hypergraph& h) {
  const auto m = h.edge_count();
  std::vector<VertexSet> sets;
  for (std::size_t f = 0; f < m; ++f) sets.push_back(h.edge_set(f));
  Graph g(m);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t e = f + 1; e < m; ++e)
      if (sets[f].intersects(sets[e])) g.add_edge(f, e);
  return g;
}

}  // namespace specbound
