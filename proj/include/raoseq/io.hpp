#pragma once

// Text and JSON forms of sequences, graphs, witnesses and reports.
//
// Edge-list text:
//   p <vertex_count>
//   u v            (one per edge, u < v, lexicographic order)
// Lines starting with '#' are comments.

#include <charconv>
#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "raoseq/graph.hpp"
#include "raoseq/rao_order.hpp"
#include "raoseq/sequence.hpp"
#include "raoseq/wqo_harness.hpp"

namespace raoseq {

using json = nlohmann::json;

namespace detail {

inline degree_t parse_integer(std::string_view token, std::string_view whole) {
  degree_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw invalid_sequence("cannot parse '" + std::string(token) + "' in '" + std::string(whole) + "'");
  return value;
}

}  // namespace detail

/// Integers separated by commas and/or whitespace, optionally wrapped in
/// parentheses. `d^k` stands for k copies of d, so "3,2^4,1" is
/// (3,2,2,2,2,1). Zeros are rejected unless strip_zeros is set, in which case
/// they are dropped before validation. The result is sorted nonincreasing.
inline IntegerSequence parse_sequence_text(std::string_view text, bool strip_zeros = false) {
  std::vector<degree_t> raw;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto caret = token.find('^');
    if (caret == std::string::npos) {
      raw.push_back(detail::parse_integer(token, text));
    } else {
      const degree_t value = detail::parse_integer(std::string_view(token).substr(0, caret), text);
      const degree_t copies = detail::parse_integer(std::string_view(token).substr(caret + 1), text);
      if (copies < 0) throw invalid_sequence("negative repeat count in '" + token + "'");
      raw.insert(raw.end(), static_cast<std::size_t>(copies), value);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  if (strip_zeros) std::erase(raw, degree_t{0});
  return parse_sequence(raw);
}

/// Count vector in written order (a_N, ..., a_1), same separators as
/// parse_sequence_text; zeros allowed, power notation not.
inline RegularitySequence parse_count_vector_text(std::string_view text) {
  std::vector<degree_t> counts;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) counts.push_back(detail::parse_integer(token, text));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')')
      flush();
    else
      token.push_back(c);
  }
  flush();
  if (counts.empty()) throw invalid_sequence("empty count vector");
  for (degree_t c : counts)
    if (c < 0) throw invalid_sequence("regularity counts must be >= 0");
  return RegularitySequence::from_written(counts);
}

inline std::string format_sequence(const IntegerSequence& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Graphs

inline std::string write_edge_list(const SimpleGraph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Throws std::invalid_argument on malformed input or an invalid edge.
inline SimpleGraph read_edge_list(std::istream& in) {
  std::optional<SimpleGraph> g;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!g) {
      std::string tag;
      long long n = -1;
      if (!(ls >> tag >> n) || tag != "p" || n < 0) throw std::invalid_argument("expected 'p <vertex_count>' header");
      g.emplace(static_cast<std::size_t>(n));
      continue;
    }
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0) throw std::invalid_argument("bad edge line '" + line + "'");
    g->add_edge(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
  }
  if (!g) throw std::invalid_argument("missing 'p <vertex_count>' header");
  return std::move(*g);
}

inline SimpleGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void to_json(json& j, const SimpleGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j = json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline void from_json(const json& j, SimpleGraph& g) {
  g = SimpleGraph(j.at("vertex_count").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a 2-array");
    g.add_edge(e[0].get<vertex_t>(), e[1].get<vertex_t>());
  }
}

// ---------------------------------------------------------------------------
// Sequences and verdicts

inline void to_json(json& j, const IntegerSequence& d) { j = d.entries(); }

inline IntegerSequence sequence_from_json(const json& j) { return IntegerSequence(j.get<std::vector<degree_t>>()); }

inline json regularity_json(const RegularitySequence& v) {
  return json{{"bound", v.bound()}, {"counts", v.written()}};
}

inline RegularitySequence regularity_from_json(const json& j) {
  const auto counts = j.at("counts").get<std::vector<degree_t>>();
  if (counts.size() != j.at("bound").get<std::size_t>()) throw std::invalid_argument("counts length must equal bound");
  return RegularitySequence::from_written(counts);
}

inline json verdict_json(const IntegerSequence& d, const GraphicalityVerdict& v) {
  json j{{"sequence", d}, {"graphic", v.graphic}, {"odd_sum", !d.even_sum()}, {"failing_index", nullptr}};
  if (v.failing_index) {
    const auto sides = erdos_gallai_sides(d, *v.failing_index);
    j["failing_index"] = *v.failing_index;
    j["lhs"] = sides.lhs;
    j["rhs"] = sides.rhs;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Witnesses and reports

inline json witness_json(const IntegerSequence& d1, const IntegerSequence& d2, const RaoWitness& w) {
  return json{{"d1", d1}, {"d2", d2}, {"g_small", w.g_small}, {"g_large", w.g_large}, {"embedding", w.embedding}};
}

struct WitnessRecord {
  IntegerSequence d1;
  IntegerSequence d2;
  RaoWitness witness;
};

inline WitnessRecord witness_from_json(const json& j) {
  return WitnessRecord{sequence_from_json(j.at("d1")), sequence_from_json(j.at("d2")),
                       RaoWitness{j.at("g_small").get<SimpleGraph>(), j.at("g_large").get<SimpleGraph>(),
                                  j.at("embedding").get<std::vector<vertex_t>>()}};
}

inline json report_json(const std::vector<IntegerSequence>& stream, const GoodPairReport& r) {
  return json{{"i", r.i},
              {"j", r.j},
              {"method", std::string(to_string(r.method))},
              {"prefix_length_scanned", r.prefix_length_scanned},
              {"witness", witness_json(stream.at(r.i - 1), stream.at(r.j - 1), r.witness)}};
}

inline std::optional<Method> method_from_string(std::string_view s) {
  if (s == "sufficient") return Method::sufficient;
  if (s == "components") return Method::components;
  if (s == "oracle") return Method::oracle;
  return std::nullopt;
}

}  // namespace raoseq
