#pragma once

// Degree sequences, the Erdos-Gallai decision procedure and regularity
// (degree-multiplicity) vectors.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace raoseq {

/// Degrees and degree sums. 64 bits keeps k(k-1) and n*d1 exact for
/// n up to 10^6 and d1 up to 10^3 (and well beyond).
using degree_t = std::int64_t;

/// Raised when a sequence violates the IntegerSequence invariants.
class invalid_sequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation requires a graphic sequence and did not get one.
class not_graphic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A nonincreasing sequence of positive integers, d1 >= d2 >= ... >= dn >= 1,
/// with n >= 1. Construction validates; use parse_sequence to sort raw input.
class IntegerSequence {
 public:
  explicit IntegerSequence(std::vector<degree_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw invalid_sequence("sequence is empty");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 1)
        throw invalid_sequence("entry " + std::to_string(entries_[i]) + " is < 1");
      if (i > 0 && entries_[i] > entries_[i - 1])
        throw invalid_sequence("sequence is not nonincreasing");
    }
  }
  IntegerSequence(std::initializer_list<degree_t> entries)
      : IntegerSequence(std::vector<degree_t>(entries)) {}

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] degree_t max_entry() const noexcept { return entries_.front(); }
  [[nodiscard]] degree_t operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] const std::vector<degree_t>& entries() const noexcept { return entries_; }
  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }

  [[nodiscard]] degree_t sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), degree_t{0});
  }
  [[nodiscard]] bool even_sum() const noexcept { return sum() % 2 == 0; }

  friend bool operator==(const IntegerSequence&, const IntegerSequence&) = default;
  friend auto operator<=>(const IntegerSequence&, const IntegerSequence&) = default;

 private:
  std::vector<degree_t> entries_;
};

/// Sorts raw integers nonincreasing and validates them.
inline IntegerSequence parse_sequence(std::span<const degree_t> raw) {
  if (raw.empty()) throw invalid_sequence("sequence is empty");
  std::vector<degree_t> entries(raw.begin(), raw.end());
  std::sort(entries.begin(), entries.end(), std::greater<>{});
  return IntegerSequence(std::move(entries));
}

inline IntegerSequence parse_sequence(std::initializer_list<degree_t> raw) {
  return parse_sequence(std::span<const degree_t>(raw.begin(), raw.size()));
}

struct GraphicalityVerdict {
  bool graphic = false;
  /// Smallest k (1-based) whose Erdos-Gallai inequality fails. Absent when the
  /// sequence is graphic or when it fails only on parity.
  std::optional<std::size_t> failing_index;

  friend bool operator==(const GraphicalityVerdict&, const GraphicalityVerdict&) = default;
};

/// Both sides of the Erdos-Gallai inequality at prefix length k:
///   lhs = d_1 + ... + d_k,  rhs = k(k-1) + sum_{i>k} min(d_i, k).
struct ErdosGallaiSides {
  degree_t lhs = 0;
  degree_t rhs = 0;
  [[nodiscard]] bool holds() const noexcept { return lhs <= rhs; }
};

/// Direct O(n) evaluation of a single inequality; 1 <= k <= n.
inline ErdosGallaiSides erdos_gallai_sides(const IntegerSequence& d, std::size_t k) {
  if (k < 1 || k > d.size()) throw std::out_of_range("Erdos-Gallai index out of range");
  const auto kk = static_cast<degree_t>(k);
  ErdosGallaiSides s;
  for (std::size_t i = 0; i < k; ++i) s.lhs += d[i];
  s.rhs = kk * (kk - 1);
  for (std::size_t i = k; i < d.size(); ++i) s.rhs += std::min(d[i], kk);
  return s;
}

/// Decides graphicality in O(n). Parity is checked first; an odd sum yields
/// graphic = false with no failing index. Otherwise the smallest violating k
/// is reported.
inline GraphicalityVerdict erdos_gallai_check(const IntegerSequence& d) {
  if (!d.even_sum()) return {false, std::nullopt};

  const std::size_t n = d.size();
  // suffix[i] = d_i + ... + d_{n-1} (0-based)
  std::vector<degree_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];

  // at_least = number of entries >= k; nonincreasing in k.
  std::size_t at_least = n;
  degree_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<degree_t>(k);
    prefix += d[k - 1];
    while (at_least > 0 && d[at_least - 1] < kk) --at_least;
    // Entries past position k: those >= k contribute k each, the rest themselves.
    const std::size_t capped_end = std::max(at_least, k);
    const degree_t capped = static_cast<degree_t>(capped_end - k) * kk;
    const degree_t rhs = kk * (kk - 1) + capped + suffix[capped_end];
    if (prefix > rhs) return {false, k};
  }
  return {true, std::nullopt};
}

/// True iff n >= d1^2 and the sum is even; every such sequence is graphic.
inline bool sufficient_by_length(const IntegerSequence& d) {
  const degree_t n = static_cast<degree_t>(d.size());
  return n >= d.max_entry() * d.max_entry() && d.even_sum();
}

/// Multiplicity vector of degree values 1..N. Stored indexable by degree value;
/// the conventional written order is highest degree first, (a_N, ..., a_1).
class RegularitySequence {
 public:
  /// All-zero vector for bound N >= 1.
  explicit RegularitySequence(std::size_t bound) : counts_(bound, 0) {
    if (bound < 1) throw std::invalid_argument("regularity bound must be >= 1");
  }

  /// From the written order (a_N, ..., a_1).
  static RegularitySequence from_written(std::span<const degree_t> highest_first) {
    RegularitySequence v(highest_first.size());
    for (std::size_t i = 0; i < highest_first.size(); ++i) {
      if (highest_first[i] < 0) throw std::invalid_argument("regularity counts must be >= 0");
      v.counts_[highest_first.size() - 1 - i] = highest_first[i];
    }
    return v;
  }
  static RegularitySequence from_written(std::initializer_list<degree_t> highest_first) {
    return from_written(std::span<const degree_t>(highest_first.begin(), highest_first.size()));
  }

  [[nodiscard]] std::size_t bound() const noexcept { return counts_.size(); }

  /// Multiplicity of degree value i, 1 <= i <= N.
  [[nodiscard]] degree_t count(std::size_t degree) const { return counts_.at(degree - 1); }
  void set_count(std::size_t degree, degree_t value) {
    if (value < 0) throw std::invalid_argument("regularity counts must be >= 0");
    counts_.at(degree - 1) = value;
  }

  /// (a_N, ..., a_1)
  [[nodiscard]] std::vector<degree_t> written() const {
    return {counts_.rbegin(), counts_.rend()};
  }

  [[nodiscard]] degree_t vertex_count() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), degree_t{0});
  }
  [[nodiscard]] degree_t degree_sum() const noexcept {
    degree_t s = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<degree_t>(i + 1) * counts_[i];
    return s;
  }
  [[nodiscard]] bool is_zero() const noexcept { return vertex_count() == 0; }

  friend bool operator==(const RegularitySequence&, const RegularitySequence&) = default;

 private:
  std::vector<degree_t> counts_;  // counts_[i - 1] = a_i
};

inline RegularitySequence to_regularity(const IntegerSequence& d, std::size_t bound) {
  if (bound < 1 || d.max_entry() > static_cast<degree_t>(bound))
    throw std::invalid_argument("max entry " + std::to_string(d.max_entry()) +
                                " exceeds regularity bound " + std::to_string(bound));
  RegularitySequence v(bound);
  for (degree_t x : d) {
    const auto i = static_cast<std::size_t>(x);
    v.set_count(i, v.count(i) + 1);
  }
  return v;
}

inline IntegerSequence from_regularity(const RegularitySequence& v) {
  if (v.is_zero()) throw invalid_sequence("regularity vector is all zero");
  std::vector<degree_t> entries;
  entries.reserve(static_cast<std::size_t>(v.vertex_count()));
  for (std::size_t i = v.bound(); i >= 1; --i) entries.insert(entries.end(), static_cast<std::size_t>(v.count(i)), static_cast<degree_t>(i));
  return IntegerSequence(std::move(entries));
}

inline void require_same_bound(const RegularitySequence& a, const RegularitySequence& b) {
  if (a.bound() != b.bound())
    throw std::invalid_argument("regularity vectors have different bounds (" + std::to_string(a.bound()) +
                                " vs " + std::to_string(b.bound()) + ")");
}

/// Coordinatewise order on count vectors.
inline bool leq_pointwise(const RegularitySequence& a, const RegularitySequence& b) {
  require_same_bound(a, b);
  for (std::size_t i = 1; i <= a.bound(); ++i)
    if (a.count(i) > b.count(i)) return false;
  return true;
}

/// b - a; requires leq_pointwise(a, b).
inline RegularitySequence pointwise_difference(const RegularitySequence& b, const RegularitySequence& a) {
  if (!leq_pointwise(a, b)) throw std::invalid_argument("difference of non-comparable regularity vectors");
  RegularitySequence out(a.bound());
  for (std::size_t i = 1; i <= a.bound(); ++i) out.set_count(i, b.count(i) - a.count(i));
  return out;
}

inline std::string to_string(const IntegerSequence& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

}  // namespace raoseq
