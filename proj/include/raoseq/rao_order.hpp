#pragma once

// The induced-subgraph order on degree sequences: D1 <= D2 when some
// realization of D1 is an induced subgraph of some realization of D2.
//
// rao_leq_oracle decides it exactly for small D2. rao_leq_sufficient and
// rao_leq_via_components are constructive sufficient tests; a nullopt result
// from them means "inconclusive", never "does not hold".

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "raoseq/graph.hpp"
#include "raoseq/isomorphism.hpp"
#include "raoseq/realization.hpp"
#include "raoseq/sequence.hpp"

namespace raoseq {

/// A pair of realizations together with an induced embedding of the first
/// into the second.
struct RaoWitness {
  SimpleGraph g_small;
  SimpleGraph g_large;
  /// embedding[v] = vertex of g_large that v of g_small maps to.
  std::vector<vertex_t> embedding;

  friend bool operator==(const RaoWitness&, const RaoWitness&) = default;
};

/// Checks degree sequences of both graphs against d1/d2 and that the
/// embedding is injective and induced.
inline bool validate_witness(const RaoWitness& w, const IntegerSequence& d1, const IntegerSequence& d2) {
  if (degree_sequence(w.g_small) != d1.entries()) return false;
  if (degree_sequence(w.g_large) != d2.entries()) return false;
  return is_induced_embedding(w.g_small, w.g_large, w.embedding);
}

/// Embedding of `first` into `second`'s large graph, when first.g_large and
/// second.g_small are the same labeled graph.
inline std::optional<RaoWitness> compose(const RaoWitness& first, const RaoWitness& second) {
  if (!(first.g_large == second.g_small)) return std::nullopt;
  RaoWitness out{first.g_small, second.g_large, {}};
  out.embedding.reserve(first.embedding.size());
  for (vertex_t v : first.embedding) out.embedding.push_back(second.embedding.at(v));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

struct OracleOptions {
  /// Largest |D2| the oracle will enumerate.
  std::size_t max_vertices = 8;
};

/// Hard ceiling for the bitmask representation used by the enumerator.
inline constexpr std::size_t oracle_hard_limit = 63;

namespace detail {

inline void require_oracle_size(std::size_t n, const OracleOptions& opts) {
  const std::size_t cap = std::min(opts.max_vertices, oracle_hard_limit);
  if (n > cap)
    throw search_limit_exceeded("sequence has " + std::to_string(n) + " entries; oracle is capped at " +
                                std::to_string(cap) + " vertices");
}

inline SimpleGraph graph_from_masks(const std::vector<std::uint64_t>& adj) {
  SimpleGraph g(adj.size());
  for (vertex_t u = 0; u < adj.size(); ++u)
    for (vertex_t v = u + 1; v < adj.size(); ++v)
      if ((adj[u] >> v) & 1U) g.add_edge(u, v);
  return g;
}

template <class Visit>
class RealizationEnumerator {
 public:
  RealizationEnumerator(const IntegerSequence& d, Visit& visit)
      : residual_(d.begin(), d.end()), adj_(d.size(), 0), visit_(visit) {}

  bool run() { return start_vertex(0); }

 private:
  // Gives the next vertex with unmet degree all of its remaining (forward) edges.
  bool start_vertex(std::size_t u) {
    while (u < residual_.size() && residual_[u] == 0) ++u;
    if (u == residual_.size()) return visit_(static_cast<const std::vector<std::uint64_t>&>(adj_));
    const degree_t need = residual_[u];
    residual_[u] = 0;
    const bool stop = choose(u, u + 1, need);
    residual_[u] = need;
    return stop;
  }

  bool choose(std::size_t u, std::size_t from, degree_t need) {
    if (need == 0) return start_vertex(u + 1);
    degree_t available = 0;
    for (std::size_t v = from; v < residual_.size(); ++v) available += residual_[v] > 0 ? 1 : 0;
    if (available < need) return false;
    for (std::size_t v = from; v < residual_.size(); ++v) {
      if (residual_[v] == 0) continue;
      --residual_[v];
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
      const bool stop = choose(u, v + 1, need - 1);
      adj_[u] &= ~(std::uint64_t{1} << v);
      adj_[v] &= ~(std::uint64_t{1} << u);
      ++residual_[v];
      if (stop) return true;
    }
    return false;
  }

  std::vector<degree_t> residual_;
  std::vector<std::uint64_t> adj_;
  Visit& visit_;
};

}  // namespace detail

/// Calls visit(adjacency masks) for every labeled graph in which vertex i has
/// degree d[i]. Each vertex's forward neighbors are chosen in lexicographic
/// order, so the visiting order is deterministic. Stops early when visit
/// returns true; returns whether it stopped.
template <class Visit>
bool enumerate_realizations(const IntegerSequence& d, Visit&& visit, OracleOptions opts = {}) {
  detail::require_oracle_size(d.size(), opts);
  if (!d.even_sum()) return false;
  detail::RealizationEnumerator<std::remove_reference_t<Visit>> e(d, visit);
  return e.run();
}

namespace detail {

/// Sorted (nonincreasing) degrees of the subgraph induced by `subset`.
inline std::vector<degree_t> induced_degrees(const std::vector<std::uint64_t>& adj, std::uint64_t subset) {
  std::vector<degree_t> out;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if ((subset >> v) & 1U) out.push_back(std::popcount(adj[v] & subset));
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

/// Next k-subset mask in increasing numeric order (Gosper's hack).
inline std::uint64_t next_subset(std::uint64_t s) {
  const std::uint64_t c = s & (~s + 1);
  const std::uint64_t r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

}  // namespace detail

/// Exact decision for the order, by exhaustive search. Enumerates every
/// labeled realization of d2 and every |d1|-subset of its vertices; returns
/// the first witness found. Throws not_graphic for non-graphic inputs and
/// search_limit_exceeded when |d2| exceeds the cap.
inline std::optional<RaoWitness> rao_leq_oracle(const IntegerSequence& d1, const IntegerSequence& d2,
                                                OracleOptions opts = {}) {
  detail::require_graphic(d1);
  detail::require_graphic(d2);
  detail::require_oracle_size(d2.size(), opts);
  const std::size_t k = d1.size();
  const std::size_t n = d2.size();
  if (k > n) return std::nullopt;

  std::optional<RaoWitness> found;
  enumerate_realizations(
      d2,
      [&](const std::vector<std::uint64_t>& adj) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit; s = detail::next_subset(s)) {
          if (detail::induced_degrees(adj, s) != d1.entries()) continue;
          std::vector<vertex_t> chosen;
          for (vertex_t v = 0; v < n; ++v)
            if ((s >> v) & 1U) chosen.push_back(v);
          RaoWitness w;
          w.g_large = detail::graph_from_masks(adj);
          w.g_small = induced_subgraph(w.g_large, chosen);
          w.embedding = chosen;
          found = std::move(w);
          return true;
        }
        return false;
      },
      opts);
  return found;
}

/// Every sequence D1 (no zero entries) with D1 <= d2, computed with the same
/// exhaustive search as rao_leq_oracle. Convenient when many D1 are tested
/// against one d2.
inline std::set<IntegerSequence> oracle_lower_set(const IntegerSequence& d2, OracleOptions opts = {}) {
  detail::require_graphic(d2);
  detail::require_oracle_size(d2.size(), opts);
  const std::size_t n = d2.size();
  std::set<std::vector<degree_t>> raw;
  enumerate_realizations(
      d2,
      [&](const std::vector<std::uint64_t>& adj) {
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
          auto degrees = detail::induced_degrees(adj, s);
          if (degrees.back() >= 1) raw.insert(std::move(degrees));
        }
        return false;
      },
      opts);
  std::set<IntegerSequence> out;
  for (auto& r : raw) out.emplace(r);
  return out;
}

// ---------------------------------------------------------------------------
// Sufficient test from regularity vectors

/// If the regularity vectors satisfy V1 <= V2 pointwise and the difference
/// V2 - V1 is zero or expands to a graphic sequence E, returns the witness
/// realize(D1) inside realize(D1) + realize(E) (disjoint union). Otherwise
/// nullopt (inconclusive). Throws std::invalid_argument when N is below a max
/// degree and not_graphic for non-graphic inputs.
inline std::optional<RaoWitness> rao_leq_sufficient(const IntegerSequence& d1, const IntegerSequence& d2,
                                                    std::size_t bound) {
  detail::require_graphic(d1);
  detail::require_graphic(d2);
  const RegularitySequence v1 = to_regularity(d1, bound);
  const RegularitySequence v2 = to_regularity(d2, bound);
  if (!leq_pointwise(v1, v2)) return std::nullopt;

  const RegularitySequence gap = pointwise_difference(v2, v1);
  const SimpleGraph h = realize(d1);
  RaoWitness w;
  w.g_small = h;
  w.embedding.resize(h.vertex_count());
  for (vertex_t v = 0; v < h.vertex_count(); ++v) w.embedding[v] = v;
  if (gap.is_zero()) {
    w.g_large = h;
    return w;
  }
  const IntegerSequence rest = from_regularity(gap);
  if (!erdos_gallai_check(rest).graphic) return std::nullopt;
  w.g_large = disjoint_union(h, realize(rest));
  return w;
}

// ---------------------------------------------------------------------------
// Component decompositions and Higman-style embedding

/// The connected components of a graph, each in canonical form, sorted by
/// (vertex count, edge list).
class ComponentDecomposition {
 public:
  ComponentDecomposition() = default;

  static ComponentDecomposition of(const SimpleGraph& g) { return from_parts(components(g)); }

  /// Canonicalizes each part. Throws std::invalid_argument if a part is empty
  /// or disconnected.
  static ComponentDecomposition from_parts(const std::vector<SimpleGraph>& parts) {
    ComponentDecomposition c;
    for (const auto& p : parts) {
      if (p.vertex_count() == 0 || !is_connected(p))
        throw std::invalid_argument("component decomposition parts must be nonempty and connected");
      c.parts_.push_back(canonical_form(p).graph);
    }
    std::sort(c.parts_.begin(), c.parts_.end(), part_less);
    return c;
  }

  [[nodiscard]] const std::vector<SimpleGraph>& parts() const noexcept { return parts_; }
  [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }

  friend bool operator==(const ComponentDecomposition&, const ComponentDecomposition&) = default;

  static bool part_less(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a.edges() < b.edges();
  }

 private:
  std::vector<SimpleGraph> parts_;
};

enum class BaseOrder { equality, induced };

namespace detail {

/// Maximum bipartite matching by augmenting paths (rows in order, columns in
/// order). Returns match[row] = column, or nullopt if some row is unmatched.
inline std::optional<std::vector<std::size_t>> match_all_rows(std::size_t rows, std::size_t cols,
                                                             const std::function<bool(std::size_t, std::size_t)>& related) {
  if (rows > cols) return std::nullopt;
  std::vector<std::vector<std::size_t>> options(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (related(r, c)) options[r].push_back(c);

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(cols, none);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<bool> visited(cols, false);
    auto augment = [&](auto&& self, std::size_t row) -> bool {
      for (std::size_t c : options[row]) {
        if (visited[c]) continue;
        visited[c] = true;
        if (owner[c] == none || self(self, owner[c])) {
          owner[c] = row;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, r)) return std::nullopt;
  }
  std::vector<std::size_t> match(rows, none);
  for (std::size_t c = 0; c < cols; ++c)
    if (owner[c] != none) match[owner[c]] = c;
  return match;
}

/// Memoized base relation over canonical parts.
class PartRelation {
 public:
  PartRelation(BaseOrder base, InducedSearchOptions opts) : base_(base), opts_(opts) {}

  bool operator()(const SimpleGraph& small, const SimpleGraph& large) {
    if (small.vertex_count() > large.vertex_count() || small.edge_count() > large.edge_count()) return false;
    if (base_ == BaseOrder::equality) return small == large;
    auto key = std::make_pair(small.edges(), large.edges());
    auto [it, inserted] =
        cache_.try_emplace(std::make_tuple(small.vertex_count(), large.vertex_count(), std::move(key)), false);
    if (inserted) it->second = is_induced_subgraph(small, large, opts_).has_value();
    return it->second;
  }

 private:
  BaseOrder base_;
  InducedSearchOptions opts_;
  std::map<std::tuple<std::size_t, std::size_t, std::pair<std::vector<Edge>, std::vector<Edge>>>, bool> cache_;
};

}  // namespace detail

/// True iff the parts of c1 map injectively onto parts of c2 with each part
/// related to its image by the base order (isomorphism or induced subgraph).
/// Decided by maximum bipartite matching over the relation.
inline bool higman_embeds(const ComponentDecomposition& c1, const ComponentDecomposition& c2, BaseOrder base,
                          InducedSearchOptions opts = {}) {
  detail::PartRelation rel(base, opts);
  const auto& a = c1.parts();
  const auto& b = c2.parts();
  return detail::match_all_rows(a.size(), b.size(), [&](std::size_t i, std::size_t j) { return rel(a[i], b[j]); })
      .has_value();
}

/// Realizes both sequences with realize_bounded, matches the components of the
/// first into components of the second under the induced-subgraph order, and
/// assembles the witness from per-component embeddings. Examines only that one
/// realization pair, so nullopt is inconclusive.
inline std::optional<RaoWitness> rao_leq_via_components(const IntegerSequence& d1, const IntegerSequence& d2) {
  const SimpleGraph g1 = realize_bounded(d1);
  const SimpleGraph g2 = realize_bounded(d2);
  if (g1.vertex_count() > g2.vertex_count()) return std::nullopt;

  struct Part {
    std::vector<vertex_t> members;
    SimpleGraph local;
    SimpleGraph canonical;
  };
  auto split = [](const SimpleGraph& g) {
    std::vector<Part> out;
    for (auto& members : component_vertex_sets(g)) {
      Part p;
      p.local = induced_subgraph(g, members);
      p.canonical = canonical_form(p.local).graph;
      p.members = std::move(members);
      out.push_back(std::move(p));
    }
    return out;
  };
  const auto parts1 = split(g1);
  const auto parts2 = split(g2);

  // Components are at most 3 * d1^2 vertices, so the search is not capped here.
  const InducedSearchOptions uncapped{static_cast<std::size_t>(-1)};
  detail::PartRelation rel(BaseOrder::induced, uncapped);
  const auto match = detail::match_all_rows(parts1.size(), parts2.size(), [&](std::size_t i, std::size_t j) {
    return rel(parts1[i].canonical, parts2[j].canonical);
  });
  if (!match) return std::nullopt;

  RaoWitness w{g1, g2, std::vector<vertex_t>(g1.vertex_count())};
  for (std::size_t i = 0; i < parts1.size(); ++i) {
    const Part& from = parts1[i];
    const Part& to = parts2[(*match)[i]];
    const auto phi = is_induced_subgraph(from.local, to.local, uncapped);
    if (!phi) throw std::logic_error("matched component has no induced embedding");
    for (std::size_t x = 0; x < from.members.size(); ++x) w.embedding[from.members[x]] = to.members[(*phi)[x]];
  }
  return w;
}

}  // namespace raoseq
