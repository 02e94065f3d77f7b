// raoseq: command-line front end for degree-sequence graphicality,
// realization and the induced-subgraph order on degree sequences.
//
// Exit codes: 0 success / holds, 1 negative verdict, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "raoseq/raoseq.hpp"

namespace {

using namespace raoseq;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

/// Thrown for bad command-line input that CLI11 itself does not catch.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::vector<std::string> positional;
  std::string file;
  bool strip_zeros = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("sequence", in.positional, "Degree sequence, e.g. 3,3,1,1 or 2^12");
  cmd->add_option("-f,--file", in.file, "Read one sequence per line ('-' for stdin)");
  cmd->add_flag("--strip-zeros", in.strip_zeros, "Drop zero entries before validation");
}

std::vector<std::string> read_lines(std::istream& is) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

/// Positional words form a single input; otherwise one per line from --file
/// or stdin. `from_lines` tells the caller which case applied.
std::vector<std::string> gather_texts(const InputOptions& in, bool& from_lines) {
  std::vector<std::string> texts;
  from_lines = in.positional.empty();
  if (!in.positional.empty()) {
    if (!in.file.empty()) throw usage_error("give a sequence or --file, not both");
    std::string joined;
    for (const auto& p : in.positional) joined += p + " ";
    texts.push_back(joined);
  } else if (!in.file.empty() && in.file != "-") {
    std::ifstream f(in.file);
    if (!f) throw usage_error("cannot open " + in.file);
    texts = read_lines(f);
  } else {
    texts = read_lines(std::cin);
  }
  if (texts.empty()) throw usage_error("no input");
  return texts;
}

std::vector<IntegerSequence> gather_sequences(const InputOptions& in, bool& from_lines) {
  std::vector<IntegerSequence> out;
  for (const auto& t : gather_texts(in, from_lines)) out.push_back(parse_sequence_text(t, in.strip_zeros));
  return out;
}

std::string certificate_text(const IntegerSequence& d, const GraphicalityVerdict& v) {
  if (v.graphic) return "graphic";
  if (!v.failing_index) return "not graphic (odd degree sum)";
  const auto sides = erdos_gallai_sides(d, *v.failing_index);
  return "not graphic (k=" + std::to_string(*v.failing_index) + ": " + std::to_string(sides.lhs) + " > " +
         std::to_string(sides.rhs) + ")";
}

OracleOptions oracle_options(std::optional<std::size_t> flag) {
  OracleOptions opts;
  if (flag) {
    opts.max_vertices = *flag;
  } else if (const char* env = std::getenv("RAOSEQ_ORACLE_CAP")) {
    try {
      opts.max_vertices = std::stoul(env);
    } catch (const std::exception&) {
      throw usage_error(std::string("RAOSEQ_ORACLE_CAP is not a number: ") + env);
    }
  }
  return opts;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  InputOptions in;
  bool json = false;
  bool prop4 = false;
};

int run_check(const CheckArgs& a) {
  bool from_lines = false;
  const auto seqs = gather_sequences(a.in, from_lines);
  int code = kOk;
  for (const auto& d : seqs) {
    const auto verdict = erdos_gallai_check(d);
    if (!verdict.graphic) code = kNegative;
    const auto n = static_cast<degree_t>(d.size());
    const degree_t square = d.max_entry() * d.max_entry();
    if (a.json) {
      json j = verdict_json(d, verdict);
      if (a.prop4) {
        j["length_bound_met"] = n >= square;
        j["sufficient_by_length"] = sufficient_by_length(d);
      }
      std::cout << j.dump() << "\n";
      continue;
    }
    if (from_lines) std::cout << format_sequence(d) << ": ";
    std::cout << certificate_text(d, verdict) << "\n";
    if (a.prop4)
      std::cout << "n >= d1^2: " << (n >= square ? "yes" : "no") << " (n=" << n << ", d1^2=" << square
                << "; even sum: " << (d.even_sum() ? "yes" : "no") << ")\n";
  }
  return code;
}

struct RealizeArgs {
  InputOptions in;
  bool json = false;
  bool bounded = false;
};

int run_realize(const RealizeArgs& a) {
  bool from_lines = false;
  const auto seqs = gather_sequences(a.in, from_lines);
  for (const auto& d : seqs) {
    const auto verdict = erdos_gallai_check(d);
    if (!verdict.graphic) {
      std::cerr << format_sequence(d) << ": " << certificate_text(d, verdict) << "\n";
      return kNegative;
    }
  }
  for (const auto& d : seqs) {
    const SimpleGraph g = a.bounded ? realize_bounded(d) : realize(d);
    std::vector<std::size_t> sizes;
    for (const auto& members : component_vertex_sets(g)) sizes.push_back(members.size());
    const degree_t bound = 3 * d.max_entry() * d.max_entry();
    if (a.json) {
      if (a.bounded) {
        std::cout << json{{"graph", g}, {"component_sizes", sizes}, {"bound", bound}}.dump() << "\n";
      } else {
        std::cout << json(g).dump() << "\n";
      }
      continue;
    }
    std::cout << write_edge_list(g);
    if (a.bounded) {
      std::cout << "# components:";
      for (auto s : sizes) std::cout << " " << s;
      std::cout << "\n# bound: " << bound << "\n";
    }
  }
  return kOk;
}

struct RegularityArgs {
  InputOptions in;
  bool json = false;
  bool decode = false;
  std::optional<std::size_t> bound;
};

int run_regularity(const RegularityArgs& a) {
  if (a.decode) {
    // Input is a count vector (a_N, ..., a_1); zeros are meaningful here.
    bool from_lines = false;
    for (const auto& t : gather_texts(a.in, from_lines)) {
      const auto counts = parse_count_vector_text(t);
      if (a.bound && *a.bound != counts.bound()) throw usage_error("-N does not match the count vector length");
      const auto d = from_regularity(counts);
      if (a.json)
        std::cout << json{{"sequence", d}}.dump() << "\n";
      else
        std::cout << format_sequence(d) << "\n";
    }
    return kOk;
  }

  bool from_lines = false;
  const auto seqs = gather_sequences(a.in, from_lines);
  for (const auto& d : seqs) {
    const std::size_t bound = a.bound.value_or(static_cast<std::size_t>(d.max_entry()));
    if (d.max_entry() > static_cast<degree_t>(bound))
      throw usage_error("max entry " + std::to_string(d.max_entry()) + " exceeds -N " + std::to_string(bound));
    const auto v = to_regularity(d, bound);
    if (a.json) {
      std::cout << regularity_json(v).dump() << "\n";
      continue;
    }
    std::string s = "(";
    const auto w = v.written();
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    std::cout << s << ")\n";
  }
  return kOk;
}

struct CompareArgs {
  std::string lower;
  std::string upper;
  std::string method = "auto";
  std::optional<std::size_t> bound;
  std::optional<std::size_t> oracle_cap;
  bool json = false;
  bool strip_zeros = false;
};

int run_compare(const CompareArgs& a) {
  const auto d1 = parse_sequence_text(a.lower, a.strip_zeros);
  const auto d2 = parse_sequence_text(a.upper, a.strip_zeros);
  for (const auto* d : {&d1, &d2}) {
    const auto verdict = erdos_gallai_check(*d);
    if (!verdict.graphic) {
      std::cerr << format_sequence(*d) << ": " << certificate_text(*d, verdict) << "\n";
      return kNegative;
    }
  }
  const std::size_t bound =
      a.bound.value_or(static_cast<std::size_t>(std::max(d1.max_entry(), d2.max_entry())));
  if (static_cast<degree_t>(bound) < std::max(d1.max_entry(), d2.max_entry()))
    throw usage_error("-N is below the largest entry");
  const OracleOptions oracle = oracle_options(a.oracle_cap);

  std::optional<RaoWitness> witness;
  std::optional<Method> used;
  bool refuted = false;
  auto try_oracle = [&] {
    witness = rao_leq_oracle(d1, d2, oracle);
    used = Method::oracle;
    refuted = !witness;
  };
  if (a.method == "sufficient") {
    witness = rao_leq_sufficient(d1, d2, bound);
    used = Method::sufficient;
  } else if (a.method == "components") {
    witness = rao_leq_via_components(d1, d2);
    used = Method::components;
  } else if (a.method == "oracle") {
    try_oracle();
  } else {
    if (auto found = compare_auto(d1, d2, bound, oracle)) {
      used = found->first;
      witness = std::move(found->second);
    } else if (d2.size() <= std::min(oracle.max_vertices, oracle_hard_limit)) {
      used = Method::oracle;
      refuted = true;
    }
  }

  const std::string result = witness ? "holds" : (refuted ? "does not hold" : "inconclusive");
  if (a.json) {
    json j{{"d1", d1}, {"d2", d2}, {"method_requested", a.method}, {"result", result}, {"method", nullptr},
           {"witness", nullptr}};
    if (witness) {
      j["method"] = std::string(to_string(*used));
      j["witness"] = witness_json(d1, d2, *witness);
    } else if (refuted) {
      j["method"] = "oracle";
    }
    std::cout << j.dump() << "\n";
  } else if (witness) {
    std::cout << "holds (" << to_string(*used) << ")\n";
  } else {
    std::cout << result << "\n";
  }
  return witness ? kOk : kNegative;
}

struct HarnessArgs {
  StreamConfig cfg;
  std::string generator = "random";
  std::string file;
  std::optional<std::size_t> oracle_cap;
  bool json = false;
  bool timing = false;
};

int run_harness(HarnessArgs a) {
  if (a.generator == "random") {
    a.cfg.generator = Generator::random;
  } else if (a.generator == "enumerate") {
    a.cfg.generator = Generator::enumerate;
  } else {
    throw usage_error("unknown generator '" + a.generator + "'");
  }
  const auto started = std::chrono::steady_clock::now();
  std::vector<IntegerSequence> stream;
  if (!a.file.empty()) {
    InputOptions in;
    in.file = a.file;
    bool from_lines = false;
    stream = gather_sequences(in, from_lines);
  } else {
    stream = generate_stream(a.cfg);
  }
  PairSearchOptions opts;
  opts.oracle = oracle_options(a.oracle_cap);
  const auto report = find_good_pair(stream, a.cfg.bound, opts);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (a.json) {
    json j = report ? report_json(stream, *report) : json{{"prefix_length_scanned", stream.size()}};
    j["found"] = report.has_value();
    j["stream_length"] = stream.size();
    if (a.timing) j["timing_ms"] = elapsed_ms;
    std::cout << j.dump() << "\n";
  } else if (report) {
    std::cout << "good pair i=" << report->i << " j=" << report->j << " method=" << to_string(report->method)
              << " scanned=" << report->prefix_length_scanned << ": " << format_sequence(stream[report->i - 1])
              << " <= " << format_sequence(stream[report->j - 1]) << "\n";
  } else {
    std::cout << "no good pair found in a prefix of length " << stream.size() << "\n";
  }
  if (a.timing && !a.json) std::cout << "time: " << elapsed_ms << " ms\n";
  return report ? kOk : kNegative;
}

struct AntichainArgs {
  std::size_t bound = 2;
  std::size_t max_length = 6;
  std::size_t min_length = 1;
  std::optional<std::size_t> oracle_cap;
  bool json = false;
};

int run_antichain(const AntichainArgs& a) {
  const auto chain = mine_antichain(a.bound, a.max_length, oracle_options(a.oracle_cap), a.min_length);
  if (a.json) {
    std::cout << json{{"bound", a.bound}, {"max_length", a.max_length}, {"min_length", a.min_length},
                      {"antichain", chain}}
                     .dump()
              << "\n";
  } else {
    for (const auto& d : chain) std::cout << format_sequence(d) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-sequence graphicality, realization and the induced-subgraph order"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Erdos-Gallai graphicality test");
  add_input_options(c_check, check.in);
  c_check->add_flag("--prop4,--length-bound", check.prop4, "Also report whether n >= d1^2");
  c_check->add_flag("--json", check.json, "JSON output");

  RealizeArgs realize_args;
  auto* c_realize = app.add_subcommand("realize", "Print a realization as an edge list");
  add_input_options(c_realize, realize_args.in);
  c_realize->add_flag("--bounded", realize_args.bounded, "Components of at most 3*d1^2 vertices");
  c_realize->add_flag("--json", realize_args.json, "JSON output");

  RealizeArgs bounded_args;
  bounded_args.bounded = true;
  auto* c_bounded = app.add_subcommand("realize-bounded", "Same as realize --bounded");
  add_input_options(c_bounded, bounded_args.in);
  c_bounded->add_flag("--json", bounded_args.json, "JSON output");

  RegularityArgs reg;
  auto* c_reg = app.add_subcommand("regularity", "Degree multiplicity vector (a_N, ..., a_1)");
  add_input_options(c_reg, reg.in);
  c_reg->add_option("-N,--bound", reg.bound, "Degree bound N (default: largest entry)");
  c_reg->add_flag("--decode", reg.decode, "Input is a count vector; print the sequence");
  c_reg->add_flag("--json", reg.json, "JSON output");

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("compare", "Is D1 <= D2 in the induced-subgraph order?");
  c_cmp->add_option("d1", cmp.lower, "Smaller sequence")->required();
  c_cmp->add_option("d2", cmp.upper, "Larger sequence")->required();
  c_cmp->add_option("-m,--method", cmp.method, "sufficient | components | oracle | auto")
      ->check(CLI::IsMember({"sufficient", "components", "oracle", "auto"}));
  c_cmp->add_option("-N,--bound", cmp.bound, "Degree bound N (default: largest entry)");
  c_cmp->add_option("--oracle-cap", cmp.oracle_cap, "Largest |D2| for the exhaustive oracle");
  c_cmp->add_flag("--json", cmp.json, "JSON output with witness");
  c_cmp->add_flag("--strip-zeros", cmp.strip_zeros, "Drop zero entries before validation");

  HarnessArgs har;
  auto* c_har = app.add_subcommand("harness", "Search a stream of bounded sequences for a good pair");
  c_har->add_option("-N,--bound", har.cfg.bound, "Entry bound N");
  c_har->add_option("--count", har.cfg.count, "Stream length");
  c_har->add_option("--seed", har.cfg.seed, "Random seed");
  c_har->add_option("--max-length", har.cfg.max_length, "Longest sequence in the stream");
  c_har->add_option("--generator", har.generator, "random | enumerate");
  c_har->add_option("-f,--file", har.file, "Read the stream from a file, one sequence per line ('-' for stdin)");
  c_har->add_option("--oracle-cap", har.oracle_cap, "Largest |D_j| for the exhaustive oracle");
  c_har->add_flag("--json", har.json, "JSON output");
  c_har->add_flag("--timing", har.timing, "Include wall-clock time (output is then not reproducible)");

  AntichainArgs anti;
  auto* c_anti = app.add_subcommand("antichain", "Greedy antichain under the exact order");
  c_anti->add_option("-N,--bound", anti.bound, "Entry bound N");
  c_anti->add_option("--max-length", anti.max_length, "Longest candidate sequence");
  c_anti->add_option("--min-length", anti.min_length, "Shortest candidate sequence");
  c_anti->add_option("--oracle-cap", anti.oracle_cap, "Largest sequence for the exhaustive oracle");
  c_anti->add_flag("--json", anti.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_check->parsed()) return run_check(check);
    if (c_realize->parsed()) return run_realize(realize_args);
    if (c_bounded->parsed()) return run_realize(bounded_args);
    if (c_reg->parsed()) return run_regularity(reg);
    if (c_cmp->parsed()) return run_compare(cmp);
    if (c_har->parsed()) return run_harness(har);
    if (c_anti->parsed()) return run_antichain(anti);
  } catch (const invalid_sequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const invalid_config& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const search_limit_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const not_graphic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
