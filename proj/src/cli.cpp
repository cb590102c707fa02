#include "ptchain/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ptchain/dp.hpp"
#include "ptchain/geometry.hpp"
#include "ptchain/io.hpp"
#include "ptchain/oracle.hpp"
#include "ptchain/transition.hpp"

namespace ptchain::cli {

using io::Json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Loaded {
  std::string digest;
  Json json;
  bool geometric = false;
};

Loaded load(const std::string& path) {
  Loaded l;
  const std::string text = io::read_text_file(path);
  l.digest = "sha256:" + sha256_hex(text);
  try {
    l.json = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, "'" + path + "' is not valid JSON");
  }
  l.geometric = l.json.is_object() && l.json.contains("kind");
  return l;
}

PtGraph graph_of(const Loaded& l) {
  return l.geometric ? geometry::build_order(io::instance_from_json(l.json))
                     : io::graph_from_json(l.json);
}

Json run_result(const std::string& command, const std::string& digest, Json result,
                Json counters, double wall_ms) {
  Json j;
  j["command"] = command;
  j["input_digest"] = digest;
  j["result"] = std::move(result);
  j["counters"] = std::move(counters);
  j["wall_time_ms"] = std::round(wall_ms * 1000.0) / 1000.0;
  return j;
}

Budget make_budget(std::uint64_t checks, std::uint64_t nodes) {
  Budget b;
  b.max_checks = checks;
  b.max_nodes = nodes;
  return b;
}

[[noreturn]] void internal(const std::string& what) { throw Error(ErrorCode::Internal, what); }

int cmd_validate(const std::string& path, bool strong, std::ostream& out) {
  const Loaded l = load(path);
  ValidationReport report;
  if (!l.geometric) {
    const io::RawGraph raw = io::parse_raw_graph(l.json);
    report = check_structure(raw.n, raw.e1, raw.e2);
  }
  if (report.ok()) {
    const PtGraph g = graph_of(l);
    report = strong ? validate_strong(g) : validate_pseudo_transitive(g);
  }
  Json j;
  j["command"] = strong ? "validate --strong" : "validate";
  j["input_digest"] = l.digest;
  j["check"] = strong ? "strong" : "pseudo_transitive";
  j["report"] = io::report_to_json(report);
  out << j.dump(2) << '\n';
  return report.ok() ? kOk : kInputError;
}

int cmd_chain(const std::string& path, const std::string& algo, const Budget& budget,
              std::ostream& out) {
  const Loaded l = load(path);
  const PtGraph g = graph_of(l);
  const auto start = Clock::now();
  Json result, counters = Json::object();
  std::vector<Vertex> chain;
  Weight value = 0;
  if (algo == "dp") {
    const DpResult r = max_weight_chain_dp(g);
    result = io::dp_result_json(r);
    counters["inspections"] = r.counters.inspections;
    counters["table_writes"] = r.counters.table_writes;
    chain = r.chain;
    value = r.value;
  } else if (algo == "transition") {
    const TransitionResult r = longest_chain_transition(g, budget);
    result = io::transition_result_json(r);
    counters["adjacency_checks"] = r.checks;
    counters["nodes"] = r.nodes;
    counters["edges"] = r.edges;
    chain = r.chain;
    value = r.value;
  } else {
    const ChainResult r = oracle::brute_max_weight_chain(g);
    result = io::brute_result_json(r);
    chain = r.chain;
    value = r.value;
  }
  const double wall = ms_since(start);
  // Transition values count vertices, the others sum weights.
  const Weight expected = algo == "transition" ? static_cast<Weight>(chain.size())
                                               : chain_weight(g, chain);
  if (!verify_chain(g, chain) || expected != value) internal("chain certificate failed");
  out << run_result("chain --algo " + algo, l.digest, std::move(result), std::move(counters), wall)
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_mis(const std::string& path, const std::string& method, const Budget& budget,
            std::ostream& out) {
  using namespace geometry;
  const Loaded l = load(path);
  if (!l.geometric) throw Error(ErrorCode::BadInput, "mis needs a geometric instance file");
  const GeomInstance inst = io::instance_from_json(l.json);
  validate_instance(inst);
  const auto start = Clock::now();
  MisResult r;
  switch (inst.kind) {
    case Kind::Chords: r = mis_circle(items_as<ChordInterval>(inst)); break;
    case Kind::Rects: r = mis_rectangles(items_as<Rect>(inst), budget); break;
    case Kind::Segments: r = mis_segments(items_as<Segment>(inst), budget); break;
    case Kind::GroundedSegments: {
      const auto segs = items_as<Segment>(inst);
      if (method == "exact") {
        r = mis_grounded_segments_exact(segs);
      } else if (method == "half") {
        r = mis_grounded_segments_half(segs);
      } else {
        try {
          r = mis_grounded_segments_exact(segs);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotAcute && e.code() != ErrorCode::NotStrong) throw;
          r = mis_grounded_segments_half(segs);
        }
      }
      break;
    }
  }
  const double wall = ms_since(start);
  if (!is_independent(inst, r.indices)) internal("independent-set certificate failed");
  out << run_result("mis --method " + method, l.digest, io::mis_result_json(r), Json::object(), wall)
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_gen(const oracle::GenSpec& spec, const std::string& out_path, std::ostream& out) {
  const auto generated = oracle::generate(spec);
  const Json j = std::holds_alternative<PtGraph>(generated)
                     ? io::graph_to_json(std::get<PtGraph>(generated))
                     : io::instance_to_json(std::get<geometry::GeomInstance>(generated));
  const std::string text = j.dump() + '\n';
  if (out_path.empty())
    out << text;
  else
    io::write_text_file(out_path, text);
  return kOk;
}

std::uint64_t sum_deg_squared(const PtGraph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.n(); ++v) total += static_cast<std::uint64_t>(g.degree(v)) * g.degree(v);
  return total;
}

int cmd_bench(const std::string& suite, const std::vector<int>& sizes, std::uint64_t seed,
              const Budget& budget, std::ostream& out) {
  if (suite == "dp-scaling") {
    out << "n,m,sum_deg2,inspections,bound,wall_ms\n";
    for (int n : sizes) {
      oracle::GenSpec spec;
      spec.kind = oracle::GenKind::Chords;
      spec.n = n;
      spec.seed = seed;
      const PtGraph g = geometry::build_order(oracle::generate_instance(spec));
      const auto start = Clock::now();
      const DpResult r = max_weight_chain_dp(g);
      const double wall = ms_since(start);
      const std::uint64_t s = sum_deg_squared(g);
      const std::uint64_t bound = 4 * (s + static_cast<std::uint64_t>(n) * n);
      if (r.counters.inspections > bound) internal("inspection counter exceeded its bound");
      out << n << ',' << g.edge_count() << ',' << s << ',' << r.counters.inspections << ','
          << bound << ',' << std::fixed << std::setprecision(3) << wall << '\n';
      out.unsetf(std::ios::fixed);
    }
    return kOk;
  }
  if (suite == "transition-scaling") {
    out << "n,m,omega_g2,nodes,edges,adjacency_checks,value,wall_ms\n";
    for (int n : sizes) {
      oracle::GenSpec spec;
      spec.kind = oracle::GenKind::Rects;
      spec.n = n;
      spec.seed = seed;
      spec.coordinate_range = std::max(30, 4 * n);
      const PtGraph g = geometry::build_order(oracle::generate_instance(spec));
      const auto start = Clock::now();
      const TransitionResult r = longest_chain_transition(g, budget);
      const double wall = ms_since(start);
      out << n << ',' << g.edge_count() << ',' << r.omega_g2 << ',' << r.nodes << ',' << r.edges
          << ',' << r.checks << ',' << r.value << ',' << std::fixed << std::setprecision(3) << wall
          << '\n';
      out.unsetf(std::ios::fixed);
    }
    return kOk;
  }
  throw Error(ErrorCode::BadInput, "unknown bench suite '" + suite + "'");
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kBudget;
    case ErrorCode::Internal:
    case ErrorCode::InternalCycle: return kInternal;
    default: return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longest and heaviest chains in pseudo-transitive graphs", "ptchain"};
  app.require_subcommand(1);

  std::string path;
  bool strong = false;
  auto* validate = app.add_subcommand("validate", "Check pseudo-transitivity of a graph or instance");
  validate->add_option("path", path, "Graph or geometric instance (JSON)")->required();
  validate->add_flag("--strong", strong, "Also require E1 and E2 to be transitive");

  std::string algo = "dp";
  std::uint64_t check_budget = Budget{}.max_checks;
  std::uint64_t node_budget = Budget{}.max_nodes;
  auto* chain = app.add_subcommand("chain", "Longest / heaviest chain");
  chain->add_option("path", path, "Graph or geometric instance (JSON)")->required();
  chain->add_option("--algo", algo, "dp | transition | brute")
      ->check(CLI::IsMember({"dp", "transition", "brute"}));
  chain->add_option("--budget", check_budget, "Adjacency-check budget (transition)");
  chain->add_option("--node-budget", node_budget, "Node budget (transition)");

  std::string method = "auto";
  auto* mis = app.add_subcommand("mis", "Maximum set of pairwise disjoint objects");
  mis->add_option("path", path, "Geometric instance (JSON)")->required();
  mis->add_option("--method", method, "exact | half | auto")
      ->check(CLI::IsMember({"exact", "half", "auto"}));
  mis->add_option("--budget", check_budget, "Adjacency-check budget (transition)");
  mis->add_option("--node-budget", node_budget, "Node budget (transition)");

  oracle::GenSpec spec;
  std::string kind = "chords", lean = "right", out_path, spec_path;
  std::vector<Weight> weight_range;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--kind", kind,
                  "segments | grounded_segments | rects | chords | raw_e2_tournament");
  gen->add_option("--n", spec.n, "Number of objects / vertices");
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("--coord-range", spec.coordinate_range, "Coordinates drawn from [0, range]");
  gen->add_option("--weight-range", weight_range, "lo,hi (raw_e2_tournament)")
      ->delimiter(',')
      ->expected(2);
  gen->add_option("--lean", lean, "right | mixed (grounded_segments)");
  gen->add_option("--spec", spec_path, "JSON file with a {\"gen\": {...}} stanza");
  gen->add_option("--out", out_path, "Output file (default: standard output)");

  std::string suite;
  std::vector<int> sizes;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Work-counter benchmark (CSV)");
  bench->add_option("--suite", suite, "dp-scaling | transition-scaling")
      ->required()
      ->check(CLI::IsMember({"dp-scaling", "transition-scaling"}));
  bench->add_option("--sizes", sizes, "Comma-separated instance sizes")->delimiter(',');
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--budget", check_budget, "Adjacency-check budget (transition)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  const Budget budget = make_budget(check_budget, node_budget);
  try {
    if (validate->parsed()) return cmd_validate(path, strong, out);
    if (chain->parsed()) return cmd_chain(path, algo, budget, out);
    if (mis->parsed()) return cmd_mis(path, method, budget, out);
    if (gen->parsed()) {
      if (!spec_path.empty()) {
        spec = io::gen_spec_from_json(io::read_json_file(spec_path));
      } else {
        spec.kind = oracle::gen_kind_from_string(kind);
        spec.lean = oracle::lean_from_string(lean);
        if (!weight_range.empty()) spec.weight_range = {weight_range[0], weight_range[1]};
      }
      return cmd_gen(spec, out_path, out);
    }
    if (bench->parsed()) return cmd_bench(suite, sizes, bench_seed, budget, out);
  } catch (const Error& e) {
    Json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (e.lower_bound()) j["lower_bound"] = *e.lower_bound();
    err << j.dump() << '\n';
    return exit_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << Json{{"error", "BAD_INPUT"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ptchain::cli
