#include "specbound/graph.hpp"

#include <algorithm>
#include <queue>

#include "specbound/errors.hpp"

namespace specbound {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(std::size_t u, std::size_t v) {
  const auto n = order();
  if (u >= n || v >= n)
    throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint >= n = " + std::to_string(n));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) return false;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
  return true;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (std::size_t u = 0; u < order(); ++u) d[u] = adjacency_[u].count();
  return d;
}

std::size_t Graph::min_degree() const noexcept {
  if (order() == 0) return 0;
  std::size_t best = order();
  for (const auto& a : adjacency_) best = std::min(best, a.count());
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& a : adjacency_) best = std::max(best, a.count());
  return best;
}

std::optional<std::size_t> Graph::regular_degree() const noexcept {
  if (order() == 0) return std::nullopt;
  const auto k = min_degree();
  if (k != max_degree()) return std::nullopt;
  return k;
}

bool Graph::is_connected() const {
  const auto n = order();
  if (n == 0) return true;
  VertexSet seen(n);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen.insert(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    const auto fresh = adjacency_[u] - seen;
    for (auto v = fresh.first(); v < n; v = fresh.next(v)) {
      seen.insert(v);
      frontier.push(v);
      ++reached;
    }
  }
  return reached == n;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v = adjacency_[u].next(u); v < order(); v = adjacency_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  const auto kept = keep.members();
  std::vector<std::size_t> position(order(), order());
  for (std::size_t i = 0; i < kept.size(); ++i) position.at(kept[i]) = i;
  Graph h(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& nb = adjacency_[kept[i]];
    for (auto v = nb.next(kept[i]); v < order(); v = nb.next(v))
      if (position[v] < kept.size()) h.add_edge(i, position[v]);
  }
  if (!labels_.empty()) {
    std::vector<std::string> sub;
    for (auto v : kept) sub.push_back(labels_[v]);
    h.set_labels(std::move(sub));
  }
  return h;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order())
    throw InvalidInput("expected " + std::to_string(order()) + " labels, got " + std::to_string(labels.size()));
  labels_ = std::move(labels);
}

std::string Graph::label(std::size_t v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

Hypergraph::Hypergraph(std::size_t nv, std::vector<std::vector<std::size_t>> edges)
    : nv_(nv), edges_(std::move(edges)) {
  for (std::size_t f = 0; f < edges_.size(); ++f) {
    auto& e = edges_[f];
    if (e.empty()) throw InvalidInput("hyperedge " + std::to_string(f) + " is empty");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.back() >= nv_)
      throw InvalidInput("hyperedge " + std::to_string(f) + " contains vertex " + std::to_string(e.back()) +
                         " >= nv = " + std::to_string(nv_));
  }
}

VertexSet Hypergraph::edge_set(std::size_t f) const { return VertexSet::of(nv_, edges_.at(f)); }

std::optional<std::size_t> Hypergraph::uniformity() const noexcept {
  if (edges_.empty()) return std::nullopt;
  const auto k = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != k) return std::nullopt;
  return k;
}

bool Hypergraph::has_isolated_vertex() const {
  VertexSet covered(nv_);
  for (const auto& e : edges_)
    for (auto v : e) covered.insert(v);
  return covered.count() != nv_;
}

CliqueCover::CliqueCover(Graph graph, std::vector<std::vector<std::size_t>> cliques)
    : graph_(std::move(graph)), cliques_(std::move(cliques)) {
  const auto n = graph_.order();
  Graph covered(n);
  for (std::size_t q = 0; q < cliques_.size(); ++q) {
    auto& c = cliques_[q];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw InvalidInput("clique " + std::to_string(q) + " is empty");
    if (c.back() >= n)
      throw InvalidInput("clique " + std::to_string(q) + " contains vertex " + std::to_string(c.back()) +
                         " >= n = " + std::to_string(n));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!graph_.adjacent(c[i], c[j]))
          throw InvalidInput("set " + std::to_string(q) + " is not a clique: " + std::to_string(c[i]) + " and " +
                             std::to_string(c[j]) + " are not adjacent");
        covered.add_edge(c[i], c[j]);
      }
  }
  for (const auto& [u, v] : graph_.edges())
    if (!covered.adjacent(u, v))
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not covered by any clique");
}

std::vector<std::size_t> CliqueCover::epsilon_degrees() const {
  std::vector<std::size_t> d(graph_.order(), 0);
  for (const auto& c : cliques_)
    for (auto v : c) ++d[v];
  return d;
}

std::size_t CliqueCover::edge_weight(std::size_t u, std::size_t v) const {
  std::size_t w = 0;
  for (const auto& c : cliques_)
    if (std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v)) ++w;
  return w;
}

}  // namespace specbound
