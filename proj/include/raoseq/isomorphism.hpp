#pragma once

// Induced-subgraph embedding search and canonical labeling for small graphs.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "raoseq/graph.hpp"

namespace raoseq {

/// An exhaustive search was asked to handle an instance above its size cap.
class search_limit_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct InducedSearchOptions {
  /// Largest host graph the backtracking search accepts.
  std::size_t max_host_vertices = 64;
};

namespace detail {

/// Row-major adjacency matrix.
class DenseAdjacency {
 public:
  explicit DenseAdjacency(const SimpleGraph& g) : n_(g.vertex_count()), bits_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) {
      bits_[e.u * n_ + e.v] = 1;
      bits_[e.v * n_ + e.u] = 1;
    }
  }
  [[nodiscard]] bool operator()(vertex_t u, vertex_t v) const { return bits_[u * n_ + v] != 0; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// BFS order over every component (roots: highest degree, then lowest index),
/// with each vertex's earliest-placed neighbor as its anchor.
struct SearchOrder {
  std::vector<vertex_t> order;
  std::vector<std::optional<std::size_t>> anchor;  // position in `order`
};

inline SearchOrder bfs_search_order(const SimpleGraph& h) {
  const std::size_t n = h.vertex_count();
  SearchOrder so;
  std::vector<std::optional<std::size_t>> position(n);
  std::vector<vertex_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), vertex_t{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](vertex_t a, vertex_t b) { return h.degree(a) > h.degree(b); });
  for (vertex_t root : by_degree) {
    if (position[root]) continue;
    std::size_t head = so.order.size();
    position[root] = so.order.size();
    so.order.push_back(root);
    so.anchor.push_back(std::nullopt);
    while (head < so.order.size()) {
      const vertex_t v = so.order[head];
      for (vertex_t w : h.neighbors(v)) {
        if (position[w]) continue;
        position[w] = so.order.size();
        so.order.push_back(w);
        so.anchor.push_back(head);
      }
      ++head;
    }
  }
  return so;
}

}  // namespace detail

/// Searches for an injective map phi from H's vertices into G's that preserves
/// both adjacency and non-adjacency. Returns phi (phi[h] = image of h) or
/// nullopt. Throws search_limit_exceeded when G exceeds the configured cap.
inline std::optional<std::vector<vertex_t>> is_induced_subgraph(const SimpleGraph& h, const SimpleGraph& g,
                                                               InducedSearchOptions opts = {}) {
  if (g.vertex_count() > opts.max_host_vertices)
    throw search_limit_exceeded("host graph has " + std::to_string(g.vertex_count()) +
                                " vertices; induced-subgraph search is capped at " +
                                std::to_string(opts.max_host_vertices));
  const std::size_t hn = h.vertex_count();
  if (hn > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;
  if (hn == 0) return std::vector<vertex_t>{};

  const detail::DenseAdjacency hadj(h);
  const detail::DenseAdjacency gadj(g);
  const detail::SearchOrder so = detail::bfs_search_order(h);
  std::vector<vertex_t> image(hn);  // by search position
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<vertex_t> all(g.vertex_count());
  std::iota(all.begin(), all.end(), vertex_t{0});

  auto consistent = [&](std::size_t pos, vertex_t candidate) {
    if (used[candidate] || g.degree(candidate) < h.degree(so.order[pos])) return false;
    for (std::size_t prev = 0; prev < pos; ++prev)
      if (hadj(so.order[pos], so.order[prev]) != gadj(candidate, image[prev])) return false;
    return true;
  };

  auto extend = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == hn) return true;
    const auto& candidates = so.anchor[pos] ? g.neighbors(image[*so.anchor[pos]]) : all;
    for (vertex_t c : candidates) {
      if (!consistent(pos, c)) continue;
      image[pos] = c;
      used[c] = true;
      if (self(self, pos + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  std::vector<vertex_t> phi(hn);
  for (std::size_t pos = 0; pos < hn; ++pos) phi[so.order[pos]] = image[pos];
  return phi;
}

/// True iff `phi` is an injective map from H into G preserving adjacency and
/// non-adjacency.
inline bool is_induced_embedding(const SimpleGraph& h, const SimpleGraph& g, const std::vector<vertex_t>& phi) {
  if (phi.size() != h.vertex_count()) return false;
  std::vector<bool> hit(g.vertex_count(), false);
  for (vertex_t x : phi) {
    if (x >= g.vertex_count() || hit[x]) return false;
    hit[x] = true;
  }
  for (vertex_t a = 0; a < phi.size(); ++a)
    for (vertex_t b = a + 1; b < phi.size(); ++b)
      if (h.has_edge(a, b) != g.has_edge(phi[a], phi[b])) return false;
  return true;
}

/// A relabeled copy of a graph that is identical for all isomorphic inputs.
struct CanonicalForm {
  /// labeling[i] = original vertex placed at canonical position i.
  std::vector<vertex_t> labeling;
  SimpleGraph graph;
};

namespace detail {

/// Isomorphism-invariant vertex colors by iterated neighborhood refinement.
/// Color ids are ranks of sorted signatures, so they do not depend on labels.
inline std::vector<std::size_t> refined_colors(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> color(n);
  for (vertex_t v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (vertex_t v = 0; v < n; ++v) {
      signature[v].push_back(color[v]);
      std::vector<std::size_t> around;
      for (vertex_t w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : rank) id = next++;
    for (vertex_t v = 0; v < n; ++v) color[v] = rank[signature[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return color;
}

}  // namespace detail

/// Canonical labeling. Vertices are grouped by refined color (ascending); inside
/// that constraint the labeling maximizes the code formed by the adjacency
/// bits A[p_i][p_j], i < j, listed column by column. Exponential in the worst
/// case; intended for the small bounded-degree components used here.
inline CanonicalForm canonical_form(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  const detail::DenseAdjacency adj(g);
  const auto color = detail::refined_colors(g);

  std::vector<vertex_t> by_color(n);
  std::iota(by_color.begin(), by_color.end(), vertex_t{0});
  std::stable_sort(by_color.begin(), by_color.end(), [&](vertex_t a, vertex_t b) { return color[a] < color[b]; });
  std::vector<std::size_t> slot_color(n);
  for (std::size_t i = 0; i < n; ++i) slot_color[i] = color[by_color[i]];

  std::vector<std::uint8_t> best_code;
  std::vector<vertex_t> best;
  std::vector<std::uint8_t> code;
  code.reserve(n * (n - 1) / 2);
  std::vector<vertex_t> placed;
  std::vector<bool> used(n, false);

  // Prunes any partial code that falls below the same-length prefix of the best.
  auto search = [&](auto&& self) -> void {
    const std::size_t pos = placed.size();
    if (pos == n) {
      if (best.empty() || code > best_code) {
        best = placed;
        best_code = code;
      }
      return;
    }
    // Candidates of this slot's color, ordered by their bit column (best first).
    std::vector<std::pair<std::vector<std::uint8_t>, vertex_t>> cands;
    for (vertex_t v = 0; v < n; ++v) {
      if (used[v] || color[v] != slot_color[pos]) continue;
      std::vector<std::uint8_t> col(pos);
      for (std::size_t i = 0; i < pos; ++i) col[i] = adj(placed[i], v) ? 1 : 0;
      cands.emplace_back(std::move(col), v);
    }
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t start = code.size();
    for (const auto& [col, v] : cands) {
      code.insert(code.end(), col.begin(), col.end());
      if (!best.empty() && std::lexicographical_compare(code.begin(), code.end(), best_code.begin(),
                                                        best_code.begin() + static_cast<std::ptrdiff_t>(code.size()))) {
        code.resize(start);
        continue;
      }
      placed.push_back(v);
      used[v] = true;
      self(self);
      used[v] = false;
      placed.pop_back();
      code.resize(start);
    }
  };
  search(search);

  CanonicalForm out;
  out.labeling = best;
  std::vector<vertex_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[best[i]] = i;
  out.graph = SimpleGraph(n);
  for (const Edge& e : g.edges()) out.graph.add_edge(position[e.u], position[e.v]);
  return out;
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace raoseq
