#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexsearch/graph.hpp"
#include "lexsearch/search.hpp"

namespace lexsearch::cli {

namespace {

using nlohmann::json;

struct GraphInput {
  std::string path;
  std::string format = "edgelist";
  std::optional<Vertex> source;
  bool allow_disconnected = false;
};

void add_graph_options(CLI::App& cmd, GraphInput& input) {
  cmd.add_option("--input", input.path, "Graph file (default: standard input)");
  cmd.add_option("--format", input.format, "Graph file format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  cmd.add_option("--source", input.source, "Source vertex (overrides the file)");
  cmd.add_flag("--allow-disconnected", input.allow_disconnected,
               "Restart at the smallest unnumbered id when a component is exhausted");
}

CLI::Option* add_search_option(CLI::App& cmd, std::string& search) {
  return cmd.add_option("--search", search, "Search kind")
      ->required()
      ->check(CLI::IsMember({"lexbfs", "lexup", "lexdfs", "lexdown"}, CLI::ignore_case));
}

Graph load_graph(const GraphInput& input, std::istream& in) {
  std::ifstream file;
  std::istream* source = &in;
  if (!input.path.empty() && input.path != "-") {
    file.open(input.path);
    if (!file) throw ParseError(0, "cannot open '" + input.path + "'");
    source = &file;
  }
  Graph g = input.format == "dimacs" ? parse_dimacs(*source) : parse_edge_list(*source);
  if (input.source) g = g.with_source(*input.source);
  return g;
}

std::vector<Vertex> parse_ids(std::istream& in, const std::string& what) {
  std::vector<Vertex> ids;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 1 ||
        value > static_cast<long long>(std::numeric_limits<std::int32_t>::max())) {
      throw ParseError(0, what + ": malformed vertex id '" + token + "'");
    }
    ids.push_back(static_cast<Vertex>(value));
  }
  return ids;
}

std::string join(const Ordering& order) {
  std::string out;
  for (const Vertex v : order) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

json counters_json(const OpCounters& c) {
  return json{{"node_moves", c.node_moves},       {"comparisons", c.comparisons},
              {"sort_elements", c.sort_elements}, {"set_creations", c.set_creations},
              {"set_removals", c.set_removals},   {"label_updates", c.label_updates},
              {"tree_descents", c.tree_descents}, {"total", c.total()}};
}

bool require_connected(const Graph& g, const GraphInput& input, std::ostream& err) {
  if (input.allow_disconnected || is_connected(g)) return true;
  err << "error: graph is disconnected (pass --allow-disconnected to restart per component)\n";
  return false;
}

struct OrderArgs {
  GraphInput input;
  std::string search;
  std::string engine = "fast";
  bool trace = false;
  bool check = false;
  bool json = false;
};

int cmd_order(const OrderArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(args.input, in);
  if (!require_connected(g, args.input, err)) return kDisconnected;
  const SearchKind kind = *parse_search_kind(args.search);
  const Engine engine = *parse_engine(args.engine);

  EngineOptions options;
  options.check_invariants = invariant_checks_requested_by_env();
  options.allow_disconnected = args.input.allow_disconnected;
  const EngineResult result = run_search(g, kind, engine, options);

  std::vector<std::string> trace;
  if (args.trace) {
    ReferenceOptions replay;
    replay.tie_break = TieBreak::follow(result.order);
    replay.allow_disconnected = args.input.allow_disconnected;
    for (const auto& step : reference_search(g, kind, replay).trace) {
      trace.push_back(format_trace_step(step));
    }
  }

  std::optional<Verdict> verdict;
  if (args.check) {
    verdict = verify_ordering(g, kind, result.order, {args.input.allow_disconnected});
    if (!verdict->valid()) err << "self-check failed: " << verdict->message << '\n';
  }

  if (args.json) {
    json report{{"search", to_string(kind)},
                {"engine", to_string(engine)},
                {"order", result.order},
                {"counters", counters_json(result.counters)}};
    if (args.trace) report["trace"] = trace;
    if (verdict) report["check"] = verdict->valid() ? "valid" : "invalid";
    out << report.dump() << '\n';
  } else {
    for (const auto& line : trace) out << line << '\n';
    out << join(result.order) << '\n';
  }
  return verdict && !verdict->valid() ? kSelfCheckFailed : kOk;
}

struct VerifyArgs {
  GraphInput input;
  std::string search;
  std::string ordering_path;
};

int cmd_verify(const VerifyArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(args.input, in);
  std::ifstream file(args.ordering_path);
  if (!file) throw ParseError(0, "cannot open '" + args.ordering_path + "'");
  const auto sigma = parse_ids(file, "ordering");
  const auto verdict = verify_ordering(g, *parse_search_kind(args.search), sigma,
                                       {args.input.allow_disconnected});
  if (!verdict.valid()) {
    err << "invalid: " << verdict.message << '\n';
    return kInvalidOrdering;
  }
  out << "valid\n";
  return kOk;
}

struct EnumerateArgs {
  GraphInput input;
  std::string search;
  std::string prefix;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool force = false;
};

constexpr std::size_t kEnumerateMaxVertices = 12;

int cmd_enumerate(const EnumerateArgs& args, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  const Graph g = load_graph(args.input, in);
  if (g.vertex_count() > kEnumerateMaxVertices && !args.force) {
    err << "error: enumeration on n=" << g.vertex_count() << " > " << kEnumerateMaxVertices
        << " vertices needs --force\n";
    return kUsageOrParseError;
  }
  if (!require_connected(g, args.input, err)) return kDisconnected;
  std::istringstream prefix_stream(args.prefix);
  const auto prefix = parse_ids(prefix_stream, "prefix");
  const auto orderings = enumerate_orderings(g, *parse_search_kind(args.search), prefix,
                                             args.limit, args.input.allow_disconnected);
  for (const auto& order : orderings) out << join(order) << '\n';
  out << "count: " << orderings.size() << '\n';
  return kOk;
}

struct FamilyArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double probability = 0.1;
  std::uint64_t seed = 1;
};

GraphFamilySpec family_spec(const FamilyArgs& args) {
  if (args.family == "grid") {
    const std::size_t rows = args.rows != 0 ? args.rows : args.n;
    const std::size_t cols = args.cols != 0 ? args.cols : rows;
    return family::Grid{rows, cols};
  }
  if (args.family == "path") return family::Path{args.n};
  if (args.family == "cycle") return family::Cycle{args.n};
  if (args.family == "clique") return family::Clique{args.n};
  return family::RandomConnected{args.n, args.probability, args.seed};
}

struct GenerateArgs {
  FamilyArgs family;
  std::string format = "edgelist";
  std::string output;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  const Graph g = generate(family_spec(args.family));
  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.output.empty() && args.output != "-") {
    file.open(args.output);
    if (!file) throw ParseError(0, "cannot write '" + args.output + "'");
    sink = &file;
  }
  if (args.format == "dimacs") {
    write_dimacs(*sink, g);
  } else {
    write_edge_list(*sink, g);
  }
  return kOk;
}

struct BenchArgs {
  std::string family;
  std::string sizes;
  std::uint64_t seed = 1;
  std::string search;
  std::string engine = "fast";
  double edge_factor = 4.0;
};

// Growth model each engine is measured against.
double complexity_budget(SearchKind kind, Engine engine, std::size_t n, std::size_t m) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  if (engine == Engine::Reference) return nn * std::max(mm, 1.0);
  if (kind == SearchKind::LexBFS || kind == SearchKind::LexUP) return nn + mm;
  return nn + mm * std::log2(mm + 1.0);
}

std::string budget_name(SearchKind kind, Engine engine) {
  if (engine == Engine::Reference) return "n*m";
  if (kind == SearchKind::LexBFS || kind == SearchKind::LexUP) return "n+m";
  return "n+m*log2(m+1)";
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> sizes;
  {
    std::string text = args.sizes;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream stream(text);
    for (const Vertex v : parse_ids(stream, "sizes")) sizes.push_back(v);
  }
  if (sizes.empty()) {
    err << "error: --sizes needs at least one positive size\n";
    return kUsageOrParseError;
  }
  const SearchKind kind = *parse_search_kind(args.search);
  const Engine engine = *parse_engine(args.engine);

  json runs = json::array();
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  for (const std::size_t size : sizes) {
    FamilyArgs family{args.family, size, 0, 0, 0.0, args.seed};
    if (args.family == "grid") {
      family.n = std::max<std::size_t>(1, static_cast<std::size_t>(
                                              std::lround(std::sqrt(static_cast<double>(size)))));
    } else if (args.family == "random") {
      family.probability =
          size > 1 ? std::min(1.0, 2.0 * (args.edge_factor - 1.0) / static_cast<double>(size - 1))
                   : 0.0;
    }
    const Graph g = generate(family_spec(family));

    const auto start = std::chrono::steady_clock::now();
    const EngineResult result = run_search(g, kind, engine);
    const auto stop = std::chrono::steady_clock::now();

    const double ratio = static_cast<double>(result.counters.total()) /
                         complexity_budget(kind, engine, g.vertex_count(), g.edge_count());
    min_ratio = std::min(min_ratio, ratio);
    max_ratio = std::max(max_ratio, ratio);
    runs.push_back({{"size", size},
                    {"n", g.vertex_count()},
                    {"m", g.edge_count()},
                    {"wall_ms", std::chrono::duration<double, std::milli>(stop - start).count()},
                    {"counters", counters_json(result.counters)},
                    {"ratio", ratio}});
  }
  json report{{"family", args.family},
              {"search", to_string(kind)},
              {"engine", to_string(engine)},
              {"seed", args.seed},
              {"normalizer", budget_name(kind, engine)},
              {"runs", runs},
              {"ratio_spread", max_ratio / min_ratio}};
  out << report.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lexicographic graph searches: LexBFS, LexUP, LexDFS, LexDOWN", "lexsearch"};
  app.require_subcommand(1);

  OrderArgs order;
  auto* order_cmd = app.add_subcommand("order", "Compute an ordering");
  add_graph_options(*order_cmd, order.input);
  add_search_option(*order_cmd, order.search);
  order_cmd->add_option("--engine", order.engine, "Search engine")
      ->check(CLI::IsMember({"fast", "reference"}));
  order_cmd->add_flag("--trace", order.trace, "Print per-step labels");
  order_cmd->add_flag("--check", order.check, "Verify the ordering before printing it");
  order_cmd->add_flag("--json", order.json, "Emit a JSON report");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an ordering against a search kind");
  add_graph_options(*verify_cmd, verify.input);
  add_search_option(*verify_cmd, verify.search);
  verify_cmd->add_option("--ordering", verify.ordering_path, "File holding whitespace-separated ids")
      ->required();

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every ordering of a small graph");
  add_graph_options(*enumerate_cmd, enumerate.input);
  add_search_option(*enumerate_cmd, enumerate.search);
  enumerate_cmd->add_option("--prefix", enumerate.prefix, "Forced leading vertices, e.g. \"1 2\"");
  enumerate_cmd->add_option("--limit", enumerate.limit, "Stop after this many orderings");
  enumerate_cmd->add_flag("--force", enumerate.force, "Allow more than 12 vertices");

  const std::vector<std::string> families{"grid", "path", "cycle", "clique", "random"};

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph");
  generate_cmd->add_option("--family", gen.family.family)->required()->check(CLI::IsMember(families));
  generate_cmd->add_option("--n", gen.family.n, "Vertex count (grid: rows)");
  generate_cmd->add_option("--rows", gen.family.rows);
  generate_cmd->add_option("--cols", gen.family.cols);
  generate_cmd->add_option("-p,--probability", gen.family.probability)
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--seed", gen.family.seed);
  generate_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  generate_cmd->add_option("--output", gen.output, "Output file (default: standard output)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts and timings across sizes");
  bench_cmd->add_option("--family", bench.family)
      ->required()
      ->check(CLI::IsMember({"grid", "path", "clique", "random"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")->required();
  bench_cmd->add_option("--seed", bench.seed);
  add_search_option(*bench_cmd, bench.search);
  bench_cmd->add_option("--engine", bench.engine)->check(CLI::IsMember({"fast", "reference"}));
  bench_cmd->add_option("--edge-factor", bench.edge_factor, "random family: target m/n")
      ->check(CLI::Range(1.0, 1e6));

  std::vector<std::string> argv_storage{"lexsearch"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrParseError;
  }

  try {
    if (order_cmd->parsed()) return cmd_order(order, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, in, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate, in, out, err);
    if (generate_cmd->parsed()) return cmd_generate(gen, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kSelfCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  }
  return kUsageOrParseError;
}

}  // namespace lexsearch::cli
