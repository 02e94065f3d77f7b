#pragma once

// Finite-prefix experiments for the bounded case: streams of graphic sequences
// with entries at most N, searches for good pairs i < j with D_i <= D_j, and
// greedy antichain mining. Nothing here verifies well-quasi-ordering itself;
// each run only exhibits instances on a finite prefix.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raoseq/rao_order.hpp"
#include "raoseq/sequence.hpp"

namespace raoseq {

enum class Generator { random, enumerate };

struct StreamConfig {
  std::size_t bound = 2;  // N
  std::size_t max_length = 8;
  std::uint64_t seed = 0;
  std::size_t count = 50;
  Generator generator = Generator::random;
};

/// Bad or unsatisfiable harness parameters.
class invalid_config : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void validate(const StreamConfig& cfg) {
  if (cfg.bound < 1) throw invalid_config("bound N must be >= 1");
  if (cfg.count < 2) throw invalid_config("count must be >= 2");
  if (cfg.max_length < 1) throw invalid_config("max length must be >= 1");
  // (1,1) is the shortest graphic sequence.
  if (cfg.max_length < 2)
    throw invalid_config("no graphic sequence has length <= " + std::to_string(cfg.max_length));
}

/// All graphic sequences with entries <= bound and length <= max_length,
/// ordered by length and then lexicographically; at most `limit` of them.
inline std::vector<IntegerSequence> enumerate_graphic(std::size_t bound, std::size_t max_length,
                                                      std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<IntegerSequence> out;
  std::vector<degree_t> current;
  auto extend = [&](auto&& self, std::size_t length, degree_t cap) -> void {
    if (out.size() >= limit) return;
    if (current.size() == length) {
      IntegerSequence d(current);
      if (erdos_gallai_check(d).graphic) out.push_back(std::move(d));
      return;
    }
    for (degree_t x = 1; x <= cap; ++x) {
      current.push_back(x);
      self(self, length, x);
      current.pop_back();
    }
  };
  for (std::size_t length = 1; length <= max_length && out.size() < limit; ++length)
    extend(extend, length, static_cast<degree_t>(bound));
  return out;
}

/// Random mode draws a length in [1, max_length] and entries in [1, N]. An odd
/// sum is repaired by appending a 1 when there is room, otherwise by
/// decrementing the smallest entry above 1, otherwise by dropping a 1.
/// Candidates failing the Erdos-Gallai test are redrawn. Same config, same
/// stream.
inline std::vector<IntegerSequence> generate_stream(const StreamConfig& cfg) {
  validate(cfg);
  if (cfg.generator == Generator::enumerate) return enumerate_graphic(cfg.bound, cfg.max_length, cfg.count);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> length_dist(1, cfg.max_length);
  std::uniform_int_distribution<degree_t> entry_dist(1, static_cast<degree_t>(cfg.bound));
  std::vector<IntegerSequence> out;
  out.reserve(cfg.count);
  while (out.size() < cfg.count) {
    std::vector<degree_t> raw(length_dist(rng));
    for (auto& x : raw) x = entry_dist(rng);
    std::sort(raw.begin(), raw.end(), std::greater<>{});
    degree_t sum = 0;
    for (degree_t x : raw) sum += x;
    if (sum % 2 != 0) {
      if (raw.size() < cfg.max_length) {
        raw.push_back(1);
      } else if (raw.front() > 1) {
        auto smallest_above_one = std::find_if(raw.rbegin(), raw.rend(), [](degree_t x) { return x > 1; });
        --*smallest_above_one;
      } else {
        raw.pop_back();
      }
    }
    if (raw.empty()) continue;
    IntegerSequence d(std::move(raw));
    if (erdos_gallai_check(d).graphic) out.push_back(std::move(d));
  }
  return out;
}

enum class Method { sufficient, components, oracle };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::sufficient: return "sufficient";
    case Method::components: return "components";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

struct GoodPairReport {
  /// 1-based stream positions, i < j.
  std::size_t i = 0;
  std::size_t j = 0;
  Method method = Method::sufficient;
  RaoWitness witness;
  /// Number of stream entries examined, equal to j.
  std::size_t prefix_length_scanned = 0;

  friend bool operator==(const GoodPairReport&, const GoodPairReport&) = default;
};

struct PairSearchOptions {
  OracleOptions oracle;
};

/// First witness for stream[i] <= stream[j] from the sufficient test, then the
/// component test, then the oracle (when |stream[j]| is within its cap).
inline std::optional<std::pair<Method, RaoWitness>> compare_auto(const IntegerSequence& lower,
                                                                 const IntegerSequence& upper, std::size_t bound,
                                                                 const OracleOptions& oracle = {}) {
  if (auto w = rao_leq_sufficient(lower, upper, bound)) return std::pair{Method::sufficient, std::move(*w)};
  if (auto w = rao_leq_via_components(lower, upper)) return std::pair{Method::components, std::move(*w)};
  if (upper.size() <= std::min(oracle.max_vertices, oracle_hard_limit))
    if (auto w = rao_leq_oracle(lower, upper, oracle)) return std::pair{Method::oracle, std::move(*w)};
  return std::nullopt;
}

/// Scans j = 2, 3, ... and for each j every i < j in increasing order; returns
/// the first pair with a validated witness, or nullopt if the stream has none
/// detectable. Throws std::invalid_argument if an entry exceeds the bound or is
/// not graphic.
inline std::optional<GoodPairReport> find_good_pair(const std::vector<IntegerSequence>& stream, std::size_t bound,
                                                    PairSearchOptions opts = {}) {
  for (const auto& d : stream) {
    if (d.max_entry() > static_cast<degree_t>(bound))
      throw std::invalid_argument("stream entry " + to_string(d) + " exceeds bound " + std::to_string(bound));
    detail::require_graphic(d);
  }
  for (std::size_t j = 1; j < stream.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto found = compare_auto(stream[i], stream[j], bound, opts.oracle);
      if (!found) continue;
      if (!validate_witness(found->second, stream[i], stream[j]))
        throw std::logic_error("witness failed validation for pair " + std::to_string(i + 1) + "," +
                               std::to_string(j + 1));
      return GoodPairReport{i + 1, j + 1, found->first, std::move(found->second), j + 1};
    }
  }
  return std::nullopt;
}

/// Greedy antichain over enumerate_graphic(bound, max_length): a candidate is
/// kept when the oracle finds it incomparable with everything kept so far.
/// Candidates shorter than min_length are skipped; with the default of 1 the
/// result is always {(1,1)}, since (1,1) lies below every graphic sequence.
/// Throws search_limit_exceeded when max_length is above the oracle cap.
inline std::vector<IntegerSequence> mine_antichain(std::size_t bound, std::size_t max_length,
                                                   OracleOptions opts = {}, std::size_t min_length = 1) {
  if (bound < 1) throw invalid_config("bound N must be >= 1");
  detail::require_oracle_size(max_length, opts);

  std::map<IntegerSequence, std::set<IntegerSequence>> lower_sets;
  auto below = [&](const IntegerSequence& a, const IntegerSequence& b) {
    if (a.size() > b.size()) return false;
    auto it = lower_sets.find(b);
    if (it == lower_sets.end()) it = lower_sets.emplace(b, oracle_lower_set(b, opts)).first;
    return it->second.contains(a);
  };

  std::vector<IntegerSequence> chain;
  for (const auto& candidate : enumerate_graphic(bound, max_length)) {
    if (candidate.size() < min_length) continue;
    bool incomparable = true;
    for (const auto& kept : chain) {
      if (below(kept, candidate) || below(candidate, kept)) {
        incomparable = false;
        break;
      }
    }
    if (incomparable) chain.push_back(candidate);
  }
  return chain;
}

}  // namespace raoseq
