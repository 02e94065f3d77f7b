#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raoseq/sequence.hpp"

namespace raoseq {

using vertex_t = std::size_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  vertex_t u = 0;
  vertex_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loop-free, multi-edge-free undirected graph on vertices 0..n-1.
/// Isolated vertices are allowed.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count) : adj_(vertex_count) {}
  SimpleGraph(std::size_t vertex_count, std::span<const Edge> edges) : adj_(vertex_count) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }
  SimpleGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : SimpleGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

  /// Throws std::invalid_argument on a loop, an out-of-range endpoint, or a
  /// duplicate edge.
  void add_edge(vertex_t u, vertex_t v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u >= adj_.size() || v >= adj_.size())
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
  }

  [[nodiscard]] bool has_edge(vertex_t u, vertex_t v) const {
    const auto& nu = adj_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  /// Sorted ascending.
  [[nodiscard]] const std::vector<vertex_t>& neighbors(vertex_t v) const { return adj_.at(v); }
  [[nodiscard]] std::size_t degree(vertex_t v) const { return adj_.at(v).size(); }

  /// Lexicographically sorted, u < v in each pair.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (vertex_t u = 0; u < adj_.size(); ++u)
      for (vertex_t v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  /// Equality of labeled graphs (not isomorphism).
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<vertex_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// Vertices of `b` are shifted by a.vertex_count().
inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t offset = a.vertex_count();
  SimpleGraph g(offset + b.vertex_count());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + offset, e.v + offset);
  return g;
}

/// Sorted nonincreasing; zeros appear for isolated vertices.
inline std::vector<degree_t> degree_sequence(const SimpleGraph& g) {
  std::vector<degree_t> degrees(g.vertex_count());
  for (vertex_t v = 0; v < g.vertex_count(); ++v) degrees[v] = static_cast<degree_t>(g.degree(v));
  std::sort(degrees.begin(), degrees.end(), std::greater<>{});
  return degrees;
}

/// Throws invalid_sequence if the graph is empty or has an isolated vertex.
inline IntegerSequence degree_integer_sequence(const SimpleGraph& g) {
  return IntegerSequence(degree_sequence(g));
}

/// The subgraph induced by `vertices`; vertex i of the result is vertices[i].
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const vertex_t> vertices) {
  SimpleGraph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

/// Vertex sets of the connected components, each sorted ascending, ordered by
/// smallest member.
inline std::vector<std::vector<vertex_t>> component_vertex_sets(const SimpleGraph& g) {
  std::vector<std::vector<vertex_t>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (vertex_t root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<vertex_t> members;
    std::queue<vertex_t> frontier;
    frontier.push(root);
    seen[root] = true;
    while (!frontier.empty()) {
      const vertex_t v = frontier.front();
      frontier.pop();
      members.push_back(v);
      for (vertex_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/// Connected components relabeled 0..k-1 in increasing original-index order.
inline std::vector<SimpleGraph> components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  for (const auto& members : component_vertex_sets(g)) out.push_back(induced_subgraph(g, members));
  return out;
}

inline bool is_connected(const SimpleGraph& g) { return component_vertex_sets(g).size() <= 1; }

namespace graphs {

inline SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (vertex_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (vertex_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace graphs

}  // namespace raoseq
