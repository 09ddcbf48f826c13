#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpl/blocks.hpp"
#include "tpl/canonical.hpp"
#include "tpl/constructions.hpp"
#include "tpl/counting.hpp"
#include "tpl/enumeration.hpp"
#include "tpl/graph6.hpp"
#include "tpl/planarity.hpp"
#include "tpl/verifier.hpp"

using namespace tpl;

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitUsage = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0, hi = 0;
};

// "7" or "5..8".
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw UsageError("");
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    Range r{std::stoi(a, &used), 0};
    if (used != a.size()) throw UsageError("");
    r.hi = std::stoi(b, &used);
    if (used != b.size() || r.lo > r.hi) throw UsageError("");
    return r;
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected N or A..B");
  }
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("bad edge '" + item + "', expected u-v");
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw UsageError("bad edge '" + item + "'");
    }
  }
  return edges;
}

std::vector<Graph> read_graphs(const std::string& input) {
  std::ifstream file;
  if (!input.empty()) {
    file.open(input);
    if (!file) throw UsageError("cannot open " + input);
  }
  std::istream& in = input.empty() ? std::cin : file;
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) graphs.push_back(decode_graph6(line));
  }
  return graphs;
}

class Output {
 public:
  explicit Output(const std::string& path, bool append = false) {
    if (!path.empty()) {
      file_.open(path, append ? std::ios::app : std::ios::trunc);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// cN for 3 <= N <= 8, k4 or p5.
struct PatternArg {
  int cycle = 0;
  bool k4 = false;
  bool p5 = false;
};

PatternArg parse_pattern_arg(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
  if (text == "k4") return {0, true, false};
  if (text == "p5") return {0, false, true};
  if (text.size() == 2 && text[0] == 'c' && text[1] >= '3' && text[1] <= '8') return {text[1] - '0', false, false};
  throw UsageError("unknown pattern '" + text + "'");
}

void check_vertices(const Graph& g, const std::vector<int>& vs) {
  std::set<int> seen(vs.begin(), vs.end());
  if (seen.size() != vs.size()) throw UsageError("path endpoints must be distinct");
  for (int v : vs)
    if (v < 0 || v >= g.order()) throw UsageError("vertex " + std::to_string(v) + " out of range");
}

struct Common {
  std::string input, out;
  int threads = default_threads();
};

void add_io(CLI::App* cmd, Common& c, bool reads) {
  if (reads) cmd->add_option("--input", c.input, "graph6 file, one graph per line (default stdin)");
  cmd->add_option("--out", c.out, "output file (default stdout)");
}

int run_construct(const std::string& family, std::optional<int> n, std::optional<int> k, std::optional<int> c,
                  const std::string& tree, bool all, bool random, const std::string& constraints, std::uint64_t seed,
                  const Common& io) {
  Output out(io.out);
  auto& os = out.stream();
  if (!n) throw UsageError("--n is required");
  if (random) {
    os << encode_graph6(random_planar_ffree(*n, parse_constraints(constraints), seed)) << '\n';
    return 0;
  }
  if (family.empty()) throw UsageError("--family or --random is required");
  auto need_k = [&]() {
    if (!k) throw UsageError("--k is required for family " + family);
    return *k;
  };
  std::vector<Graph> graphs;
  if (family == "k2bip") {
    graphs.push_back(build_k2_bipartite(*n));
  } else if (family == "jn") {
    if (all) {
      graphs = enumerate_jn(*n);
    } else {
      JnSpec spec = default_jn_spec(*n);
      if (c) spec.c = *c;
      if (!tree.empty()) spec.tree = parse_edge_list(tree);
      else if (c) {
        spec.tree.clear();
        for (int i = 1; i < *n - 2 - spec.c; ++i) spec.tree.emplace_back(i - 1, i);
      }
      graphs.push_back(build_jn(spec).graph);
    }
  } else if (family == "hn") {
    graphs.push_back(build_hn(*n));
  } else if (family == "k4stack") {
    if (*n % 3 != 0) throw UsageError("k4stack needs n divisible by 3");
    graphs.push_back(build_k4_stack(*n / 3));
  } else if (family == "geven") {
    graphs.push_back(build_g_even(*n, need_k()));
  } else if (family == "godd") {
    graphs.push_back(build_g_odd(*n, need_k()));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  for (const Graph& g : graphs) os << encode_graph6(g) << '\n';
  return 0;
}

int run_count(const std::string& pattern, bool per_vertex, const Common& io) {
  const PatternArg p = parse_pattern_arg(pattern);
  if (p.p5) throw UsageError("use the paths subcommand for p5");
  Output out(io.out);
  auto& os = out.stream();
  for (const Graph& g : read_graphs(io.input)) {
    if (!per_vertex) {
      os << (p.k4 ? count_k4(g) : count_cycles(g, p.cycle)) << '\n';
      continue;
    }
    if (p.k4) throw UsageError("--per-vertex supports cycle patterns only");
    Count lowest_count = ~Count{0};
    for (Vertex v = 0; v < g.order(); ++v) {
      const Count c = count_cycles_through(g, v, p.cycle);
      lowest_count = std::min(lowest_count, c);
      os << (v ? " " : "") << c;
    }
    os << " min=" << (g.order() ? lowest_count : 0) << '\n';
  }
  return 0;
}

int run_paths(const std::vector<int>& pair, const std::vector<int>& triple, const Common& io) {
  Output out(io.out);
  auto& os = out.stream();
  for (const Graph& g : read_graphs(io.input)) {
    if (!pair.empty()) {
      check_vertices(g, pair);
      os << count_paths4(g, pair[0], pair[1]) << '\n';
    } else if (!triple.empty()) {
      check_vertices(g, triple);
      os << triple_path_total(g, triple[0], triple[1], triple[2]) << '\n';
    } else {
      const auto p = pair_path_matrix(g);
      Count best_pair = 0, best_triple = 0;
      for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
          best_pair = std::max(best_pair, p[a][b]);
          for (int c = b + 1; c < g.order(); ++c) best_triple = std::max(best_triple, p[a][b] + p[b][c] + p[a][c]);
        }
      os << "max_pair=" << best_pair << " max_triple=" << best_triple << '\n';
    }
  }
  return 0;
}

int run_blocks(const std::string& closure, const Common& io) {
  ClosureMode mode;
  if (closure == "triangle") mode = ClosureMode::Triangle;
  else if (closure == "face") mode = ClosureMode::Face;
  else throw UsageError("--closure must be triangle or face");
  Output out(io.out);
  auto& os = out.stream();
  for (const Graph& g : read_graphs(io.input)) {
    const BlockCensus census = block_census(g, mode);
    os << "graph " << encode_graph6(g) << " blocks=" << census.blocks.size() << " triangles=" << census.total_triangles()
       << " leftover=" << census.leftover_triangles << '\n';
    for (std::size_t i = 0; i < census.blocks.size(); ++i) {
      const TriangularBlock& b = census.blocks[i];
      os << "  " << block_label_name(b.label) << " c3=" << census.per_block_c3[i] << " edges=";
      for (std::size_t j = 0; j < b.edges.size(); ++j) os << (j ? "," : "") << b.edges[j].first << '-' << b.edges[j].second;
      os << '\n';
    }
  }
  return 0;
}

int run_enumerate(int n, const std::string& constraints, const std::string& frontier, bool count_only, int split_depth,
                  const Common& io) {
  const EnumSpec spec{n, parse_constraints(constraints)};
  std::set<std::size_t> done;
  if (!frontier.empty()) {
    std::ifstream in(frontier);
    std::size_t unit;
    while (in >> unit) done.insert(unit);
  }
  Output out(io.out, !frontier.empty() && !done.empty());
  auto& os = out.stream();
  std::ofstream frontier_out;
  if (!frontier.empty()) frontier_out.open(frontier, std::ios::app);
  std::size_t total = 0;
  EnumOptions options;
  options.threads = io.threads;
  options.split_depth = split_depth;
  options.skip_unit = [&](std::size_t u) { return done.count(u) > 0; };
  options.unit_done = [&](std::size_t u) {
    if (!frontier_out.is_open()) return;
    os.flush();
    frontier_out << u << '\n';
    frontier_out.flush();
  };
  enumerate(spec, [&](const Graph& g) {
    ++total;
    if (!count_only) os << encode_graph6(g) << '\n';
  }, options);
  if (count_only) os << total << '\n';
  return 0;
}

VerifyOptions verify_options(const std::string& mode, const std::string& counterexample_dir, const Common& io) {
  VerifyOptions o;
  o.threads = io.threads;
  o.counterexample_dir = counterexample_dir;
  if (mode == "observe") o.mode = CheckMode::Observe;
  else if (mode != "assert") throw UsageError("--mode must be assert or observe");
  return o;
}

std::string format_conjecture(const std::vector<ConjectureRow>& rows, const std::string& format) {
  std::ostringstream os;
  auto opt = [](const std::optional<Count>& c) { return c ? std::to_string(*c) : std::string(); };
  if (format == "csv") {
    os << "k,n,side,cycle_length,construction,exhaustive_max,relation\n";
    for (const auto& r : rows)
      os << r.k << ',' << r.n << ',' << r.side << ',' << r.cycle_length << ',' << opt(r.construction) << ','
         << opt(r.exhaustive_max) << ',' << r.relation << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["k"] = r.k;
      j["n"] = r.n;
      j["side"] = r.side;
      j["cycle_length"] = r.cycle_length;
      j["construction"] = r.construction ? nlohmann::ordered_json(*r.construction) : nlohmann::ordered_json();
      j["exhaustive_max"] = r.exhaustive_max ? nlohmann::ordered_json(*r.exhaustive_max) : nlohmann::ordered_json();
      j["relation"] = r.relation;
      arr.push_back(j);
    }
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& r : rows)
      os << "k=" << r.k << " n=" << r.n << ' ' << r.side << " C" << r.cycle_length << " construction="
         << (r.construction ? opt(r.construction) : "-") << " exhaustive=" << (r.exhaustive_max ? opt(r.exhaustive_max) : "-")
         << " relation=\"" << r.relation << "\"\n";
  }
  return os.str();
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json" && format != "text") throw UsageError("--format must be csv, json or text");
}

int run_verify(const std::string& theorem, const std::string& n_text, const std::string& mode, const std::string& format,
               const std::string& counterexample_dir, bool instance, const Common& io) {
  check_format(format);
  Output out(io.out);
  auto& os = out.stream();
  if (instance) {
    bool failed = false;
    for (const Graph& g : read_graphs(io.input)) {
      os << encode_graph6(g) << '\n';
      for (const InstanceCheck& c : verify_instance(g)) {
        failed = failed || c.outcome == CheckOutcome::Fail;
        os << "  " << c.invariant << ' ' << outcome_name(c.outcome);
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
      }
    }
    return failed ? kExitViolation : 0;
  }
  if (theorem.empty()) throw UsageError("--theorem is required (or --instance)");
  if (n_text.empty()) throw UsageError("--n or --n-range is required");
  const Range r = parse_range(n_text);
  const VerifyOptions options = verify_options(mode, counterexample_dir, io);
  std::vector<TheoremId> ids;
  if (theorem == "all") ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  else ids.push_back(parse_theorem(theorem));
  std::vector<VerificationReport> reports;
  for (TheoremId id : ids) {
    auto part = verify_theorem(id, r.lo, r.hi, options);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  os << (format == "csv" ? reports_csv(reports) : format == "json" ? reports_json(reports) : reports_text(reports));
  const bool violation =
      std::any_of(reports.begin(), reports.end(), [](const VerificationReport& v) { return v.status == Status::Violation; });
  if (violation)
    for (const auto& v : reports)
      if (!v.counterexample_path.empty()) std::cerr << "counterexample written to " << v.counterexample_path << '\n';
  return violation ? kExitViolation : 0;
}

int run_conjecture(int k, const std::string& n_text, const std::string& format, const Common& io) {
  check_format(format);
  if (n_text.empty()) throw UsageError("--n or --n-range is required");
  const Range r = parse_range(n_text);
  VerifyOptions o;
  o.threads = io.threads;
  Output out(io.out);
  out.stream() << format_conjecture(explore_conjecture(k, r.lo, r.hi, o), format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar generalized Turan numbers: constructions, counting, enumeration, verification"};
  app.require_subcommand(1);
  Common io;

  auto* construct = app.add_subcommand("construct", "emit a construction as graph6");
  std::string family, tree, constraints = "planar";
  std::optional<int> n_opt, k_opt, c_opt;
  bool all = false, random = false;
  std::uint64_t seed = 1;
  construct->add_option("--family", family, "k2bip, jn, hn, k4stack, geven or godd");
  construct->add_option("--n", n_opt, "order");
  construct->add_option("--k", k_opt, "half cycle length for geven and godd");
  construct->add_option("--c", c_opt, "number of u-v middle vertices for jn");
  construct->add_option("--tree", tree, "tree edge list for jn, e.g. 0-1,1-2");
  construct->add_flag("--all", all, "every member of J_n");
  construct->add_flag("--random", random, "random maximal planar graph under --constraints");
  construct->add_option("--constraints", constraints, "constraints for --random");
  construct->add_option("--seed", seed, "seed for --random");
  add_io(construct, io, false);

  auto* count = app.add_subcommand("count", "count a pattern in each input graph");
  std::string pattern;
  bool per_vertex = false;
  count->add_option("--pattern", pattern, "c3..c8 or k4")->required();
  count->add_flag("--per-vertex", per_vertex, "cycles through each vertex, then the minimum");
  add_io(count, io, true);

  auto* blocks = app.add_subcommand("blocks", "triangular block decomposition");
  std::string closure = "triangle";
  blocks->add_option("--closure", closure, "triangle or face");
  add_io(blocks, io, true);

  auto* paths = app.add_subcommand("paths", "paths of length four");
  std::vector<int> pair, triple;
  paths->add_option("--pair", pair, "u v")->expected(2);
  paths->add_option("--triple", triple, "u v w")->expected(3);
  add_io(paths, io, true);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorph-free planar graphs");
  int n_enum = 0, split_depth = 0;
  std::string enum_constraints = "planar", frontier;
  bool count_only = false;
  enumerate_cmd->add_option("--n", n_enum, "order")->required();
  enumerate_cmd->add_option("--constraints", enum_constraints, "comma list: planar,c3free,..,c6free,k4free,connected");
  enumerate_cmd->add_option("--frontier", frontier, "resume file of finished work units");
  enumerate_cmd->add_option("--split-depth", split_depth, "work unit depth (0 picks one)");
  enumerate_cmd->add_flag("--count", count_only, "print only the number of graphs");
  enumerate_cmd->add_option("--threads", io.threads, "worker threads");
  add_io(enumerate_cmd, io, false);

  auto* verify = app.add_subcommand("verify", "exhaustive theorem checks or per-instance invariants");
  std::string theorem, n_text, mode = "assert", format = "text", counterexample_dir = ".";
  bool instance = false;
  verify->add_option("--theorem", theorem, "theorem id such as C4C3 or T_C4C3, or all");
  auto* n_flag = verify->add_option("--n", n_text, "N or A..B");
  verify->add_option("--n-range", n_text, "A..B")->excludes(n_flag);
  verify->add_option("--mode", mode, "assert or observe");
  verify->add_option("--format", format, "csv, json or text");
  verify->add_option("--counterexample-dir", counterexample_dir, "where violations are persisted");
  verify->add_flag("--instance", instance, "check invariants of each input graph");
  verify->add_option("--threads", io.threads, "worker threads");
  add_io(verify, io, true);

  auto* conjecture = app.add_subcommand("conjecture", "compare G_even and G_odd with exhaustive maxima");
  int k_conj = 2;
  std::string conj_n, conj_format = "text";
  conjecture->add_option("--k", k_conj, "2..4")->required();
  auto* conj_n_flag = conjecture->add_option("--n", conj_n, "N or A..B");
  conjecture->add_option("--n-range", conj_n, "A..B")->excludes(conj_n_flag);
  conjecture->add_option("--format", conj_format, "csv, json or text");
  conjecture->add_option("--threads", io.threads, "worker threads");
  add_io(conjecture, io, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return run_construct(family, n_opt, k_opt, c_opt, tree, all, random, constraints, seed, io);
    if (*count) return run_count(pattern, per_vertex, io);
    if (*blocks) return run_blocks(closure, io);
    if (*paths) {
      if (!pair.empty() && !triple.empty()) throw UsageError("--pair and --triple are exclusive");
      return run_paths(pair, triple, io);
    }
    if (*enumerate_cmd) return run_enumerate(n_enum, enum_constraints, frontier, count_only, split_depth, io);
    if (*verify) return run_verify(theorem, n_text, mode, format, counterexample_dir, instance, io);
    if (*conjecture) return run_conjecture(k_conj, conj_n, conj_format, io);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
