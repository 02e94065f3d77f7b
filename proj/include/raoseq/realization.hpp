#pragma once

// Realizing graphic sequences, including the construction whose components
// are all at most 3 * d1^2 vertices.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "raoseq/graph.hpp"
#include "raoseq/sequence.hpp"

namespace raoseq {

/// Raised by plan_bounded when n < d1^2: there is nothing to chunk and the
/// sequence should be realized directly.
class plan_not_applicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline void require_graphic(const IntegerSequence& d) {
  const auto verdict = erdos_gallai_check(d);
  if (verdict.graphic) return;
  std::string msg = "sequence " + to_string(d) + " is not graphic";
  if (verdict.failing_index) {
    const auto sides = erdos_gallai_sides(d, *verdict.failing_index);
    msg += " (k=" + std::to_string(*verdict.failing_index) + ": " + std::to_string(sides.lhs) + " > " +
           std::to_string(sides.rhs) + ")";
  } else {
    msg += " (odd degree sum)";
  }
  throw not_graphic(msg);
}

}  // namespace detail

/// Highest-degree-first repeated reduction. Vertex i receives degree d[i].
/// Each step takes the vertex with the largest residual degree (ties: lowest
/// index) and joins it to the next-largest residual vertices (same tie rule).
inline SimpleGraph realize(const IntegerSequence& d) {
  detail::require_graphic(d);
  const std::size_t n = d.size();
  SimpleGraph g(n);
  std::vector<degree_t> residual(d.begin(), d.end());
  std::vector<vertex_t> order(n);
  std::iota(order.begin(), order.end(), vertex_t{0});

  auto by_residual = [&](vertex_t a, vertex_t b) {
    if (residual[a] != residual[b]) return residual[a] > residual[b];
    return a < b;
  };
  for (;;) {
    std::sort(order.begin(), order.end(), by_residual);
    const vertex_t hub = order.front();
    const auto need = static_cast<std::size_t>(residual[hub]);
    if (need == 0) break;
    // Guaranteed by graphicality; a failure here is a logic error.
    if (need >= n || residual[order[need]] < 1) throw std::logic_error("reduction failed on a graphic sequence");
    for (std::size_t i = 1; i <= need; ++i) {
      g.add_edge(hub, order[i]);
      --residual[order[i]];
    }
    residual[hub] = 0;
  }
  return g;
}

/// Chunking and pairing used by realize_bounded.
struct RealizationPlan {
  /// L = d1^2.
  std::size_t chunk_length = 0;
  /// q consecutive slices of the input: q-1 of length L, the last of length L + r.
  std::vector<IntegerSequence> chunks;
  /// Even-sum chunks as-is, odd-sum chunks merged in pairs, each re-sorted
  /// nonincreasing. Every block has L <= length <= 3L and even sum.
  std::vector<IntegerSequence> paired_blocks;
  /// paired_blocks[b] was assembled from chunks sources[b] (one or two indices).
  std::vector<std::vector<std::size_t>> sources;
};

/// Odd-sum chunks are paired in ascending chunk order (first with second,
/// third with fourth, ...). A merged block is emitted where its second chunk
/// sits. Throws plan_not_applicable when n < d1^2.
inline RealizationPlan plan_bounded(const IntegerSequence& d) {
  detail::require_graphic(d);
  const auto max_entry = static_cast<std::size_t>(d.max_entry());
  const std::size_t L = max_entry * max_entry;
  const std::size_t n = d.size();
  const std::size_t q = n / L;
  if (q == 0)
    throw plan_not_applicable("n = " + std::to_string(n) + " < d1^2 = " + std::to_string(L) +
                              "; realize directly");

  RealizationPlan plan;
  plan.chunk_length = L;
  for (std::size_t c = 0; c < q; ++c) {
    const auto first = d.begin() + static_cast<std::ptrdiff_t>(c * L);
    const auto last = (c + 1 == q) ? d.end() : first + static_cast<std::ptrdiff_t>(L);
    plan.chunks.emplace_back(std::vector<degree_t>(first, last));
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::size_t pending_odd = none;
  for (std::size_t c = 0; c < q; ++c) {
    const IntegerSequence& chunk = plan.chunks[c];
    if (chunk.even_sum()) {
      plan.paired_blocks.push_back(chunk);
      plan.sources.push_back({c});
    } else if (pending_odd == none) {
      pending_odd = c;
    } else {
      std::vector<degree_t> merged(plan.chunks[pending_odd].begin(), plan.chunks[pending_odd].end());
      merged.insert(merged.end(), chunk.begin(), chunk.end());
      std::sort(merged.begin(), merged.end(), std::greater<>{});
      plan.paired_blocks.emplace_back(std::move(merged));
      plan.sources.push_back({pending_odd, c});
      pending_odd = none;
    }
  }
  // The total sum is even, so odd chunks come in pairs.
  if (pending_odd != none) throw std::logic_error("unpaired odd-sum chunk");
  return plan;
}

/// Realizes d so that every connected component has at most 3 * d1^2
/// vertices. Block b of the plan occupies a contiguous vertex range, in block
/// order.
inline SimpleGraph realize_bounded(const IntegerSequence& d) {
  detail::require_graphic(d);
  const auto max_entry = static_cast<std::size_t>(d.max_entry());
  if (d.size() < max_entry * max_entry) return realize(d);

  const RealizationPlan plan = plan_bounded(d);
  std::size_t total = 0;
  for (const auto& block : plan.paired_blocks) total += block.size();
  SimpleGraph g(total);
  std::size_t offset = 0;
  for (const auto& block : plan.paired_blocks) {
    const SimpleGraph part = realize(block);
    for (const Edge& e : part.edges()) g.add_edge(e.u + offset, e.v + offset);
    offset += part.vertex_count();
  }
  return g;
}

}  // namespace raoseq
