#include "epc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "epc/canon.hpp"
#include "epc/checks.hpp"
#include "epc/families.hpp"
#include "epc/report.hpp"
#include "epc/search.hpp"

namespace epc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Unlimited probes up to order 40; beyond that each (edge, length) probe
// gets a fixed ceiling unless --budget says otherwise.
constexpr int kUnlimitedBudgetOrder = 40;
constexpr long long kLargeOrderBudget = 50'000'000;

long long budget_for(int order, long long requested) {
  if (requested >= 0) return requested;
  return order <= kUnlimitedBudgetOrder ? 0 : kLargeOrderBudget;
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (long long line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.detail(), e.offset());
    }
  }
  if (out.empty()) throw UsageError("no graph6 input on standard input");
  return out;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::holds: return kHolds;
    case Verdict::fails: return kFails;
    case Verdict::unknown: return kBudget;
  }
  return kFails;
}

// A false verdict outranks an unknown one: it is definite.
int combine(int a, int b) {
  if (a == kFails || b == kFails) return kFails;
  return std::max(a, b);
}

void emit(Io& io, const json& j, bool line_mode) {
  if (line_mode) {
    io.out << j.dump() << '\n';
  } else {
    io.out << j.dump(2) << '\n';
  }
}

void print_stats(Io& io, const SearchOutcome& s) {
  io.err << "searched " << s.enumerated << " classes, " << s.passing << " passing";
  for (const StageCount& c : s.stages) io.err << ", " << c.stage << " " << c.count;
  io.err << ", " << std::llround(s.elapsed_ms) << " ms\n";
}

int search_code(const SearchOutcome& s) { return s.budget_exhausted ? kBudget : kHolds; }

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int n = -1;
  int k = -1;
  std::vector<std::string> parts;
  std::string format = "graph6";
};

int do_construct(Io& io, const ConstructArgs& a) {
  const auto family = family_from_name(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  FamilySpec spec{*family, 0, a.parts};
  switch (*family) {
    case Family::h_block:
    case Family::g_ring:
      if (a.k < 0) throw UsageError(a.family + " needs --k");
      spec.param = a.k;
      break;
    case Family::seq_join:
      if (a.parts.empty()) throw UsageError("seq_join needs --parts");
      break;
    default:
      if (a.n < 0) throw UsageError(a.family + " needs --n");
      spec.param = a.n;
  }
  const LabeledGraph lg = construct(spec);
  if (a.format == "dot") {
    io.out << emit_dot(lg.graph, lg.labels);
  } else {
    io.out << emit_graph6(lg.graph) << '\n';
  }
  return kHolds;
}

// check / spectrum -----------------------------------------------------------

struct CheckArgs {
  std::string predicate;
  long long budget = -1;
  int k = 2;
  bool batch = false;
};

CheckReport run_check(const CheckArgs& a, const Graph& g) {
  const long long limit = budget_for(g.order(), a.budget);
  if (a.predicate == "triangle-cover") return has_triangle_cover(g);
  if (a.predicate == "edge-pancyclic") return is_edge_pancyclic(g, limit);
  if (a.predicate == "vertex-pancyclic") return is_vertex_pancyclic(g, limit);
  if (a.predicate == "pancyclic") return is_pancyclic(g, limit);
  if (a.predicate == "layer-bounds") {
    if (!is_connected(g)) throw GraphError("layer-bounds needs a connected graph");
    return verify_distance_layer_bounds(g);
  }
  return connectivity_report(g, a.k);
}

int do_check(Io& io, const CheckArgs& a) {
  const std::vector<Graph> graphs = read_graphs(io.in);
  const bool line_mode = a.batch || graphs.size() > 1;
  int code = kHolds;
  for (const Graph& g : graphs) {
    const auto t0 = Clock::now();
    const CheckReport r = run_check(a, g);
    json inputs = {{"predicate", a.predicate}, {"graph6", emit_graph6(g)}, {"budget", budget_for(g.order(), a.budget)}};
    if (a.predicate == "connectivity") inputs["k"] = a.k;
    emit(io, envelope("check", inputs, to_json(r), ms_since(t0)), line_mode);
    code = combine(code, verdict_code(r.verdict));
  }
  return code;
}

struct SpectrumArgs {
  long long budget = -1;
  bool witnesses = false;
  bool batch = false;
};

int do_spectrum(Io& io, const SpectrumArgs& a) {
  const std::vector<Graph> graphs = read_graphs(io.in);
  const bool line_mode = a.batch || graphs.size() > 1;
  int code = kHolds;
  for (const Graph& g : graphs) {
    const auto t0 = Clock::now();
    const long long limit = budget_for(g.order(), a.budget);
    CycleSpectrum s;
    s.order = g.order();
    for (const Edge& e : g.edges()) {
      s.edges.push_back(edge_cycle_lengths(g, e, {3, g.order()}, limit, a.witnesses));
      if (s.edges.back().unknown) s.complete = false;
    }
    const json inputs = {{"graph6", emit_graph6(g)}, {"budget", limit}, {"witnesses", a.witnesses}};
    emit(io, envelope("spectrum", inputs, to_json(s), ms_since(t0)), line_mode);
    if (!s.complete) code = kBudget;
  }
  return code;
}

// search ---------------------------------------------------------------------

struct SearchArgs {
  int order = 0;
  std::string predicate;
  int kappa = 1;
  std::string stream;
  bool exhaustive = false;
  long long budget = -1;
  int workers = 0;
};

SearchOptions options_for(const SearchArgs& a) { return {a.workers, a.budget < 0 ? 0 : a.budget}; }

int do_min_size(Io& io, const SearchArgs& a) {
  const auto t0 = Clock::now();
  const SearchOptions opt = options_for(a);
  SearchOutcome s;
  json inputs = {{"order", a.order}, {"predicate", a.predicate}};
  if (a.predicate == "edge-pancyclic") {
    if (!a.stream.empty()) {
      inputs["stream"] = a.stream;
      if (a.stream == "-") {
        s = min_size_edge_pancyclic_stream(io.in, a.order, opt);
      } else {
        std::ifstream file(a.stream);
        if (!file) throw UsageError("cannot open " + a.stream);
        s = min_size_edge_pancyclic_stream(file, a.order, opt);
      }
    } else {
      s = min_size_edge_pancyclic(a.order, opt);
    }
  } else {
    if (!a.stream.empty()) throw UsageError("--stream is supported for edge-pancyclic only");
    inputs["kappa"] = a.kappa;
    s = min_size_triangle_cover(a.order, a.kappa, opt);
  }
  print_stats(io, s);
  emit(io, envelope("search min-size", inputs, to_json(s), ms_since(t0)), false);
  return search_code(s);
}

int do_max_diameter(Io& io, const SearchArgs& a) {
  const auto t0 = Clock::now();
  const SearchOutcome s = max_diameter_edge_pancyclic(a.order, a.exhaustive, options_for(a));
  print_stats(io, s);
  const json inputs = {{"order", a.order}, {"exhaustive", a.exhaustive}};
  emit(io, envelope("search max-diameter", inputs, to_json(s), ms_since(t0)), false);
  return search_code(s);
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  int n = -1;
  int k = -1;
  bool exhaustive = false;
  long long budget = -1;
  int workers = 0;
};

std::vector<std::string> canonical_set(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  for (const Graph& g : graphs) out.push_back(emit_graph6(canonical_graph(g)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> triangle_cover_extremal(int n, int kappa) {
  if (kappa == 3) return {wheel(n).graph};
  if (kappa == 2 && n >= 8 && n % 2 == 0) return {a_graph(n).graph};
  if (kappa == 2 && n >= 9) {
    return {odd_extremal(OddKind::F, n).graph, odd_extremal(OddKind::G, n).graph, odd_extremal(OddKind::H, n).graph};
  }
  return {};
}

json verdict_json(const std::string& claim, bool pass, json expected, json observed) {
  return {{"claim", claim}, {"pass", pass}, {"expected", std::move(expected)}, {"observed", std::move(observed)}};
}

int need(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("this claim needs ") + flag);
  return value;
}

int do_verify(Io& io, const VerifyArgs& a) {
  const auto t0 = Clock::now();
  const SearchOptions opt{a.workers, a.budget < 0 ? 0 : a.budget};
  json inputs = {{"claim", a.claim}};
  json result;
  int code = kHolds;

  if (a.claim == "lemma1" || a.claim == "lemma2" || a.claim == "erdos") {
    const int n = need(a.n, "--n");
    inputs["n"] = n;
    const int kappa = a.claim == "erdos" ? 1 : a.claim == "lemma1" ? 2 : 3;
    const int bound = kappa == 1 ? (3 * n - 2) / 2 : kappa == 2 ? (3 * n + 1) / 2 : 2 * n - 2;
    const SearchOutcome s = min_size_triangle_cover(n, kappa, opt);
    const std::vector<Graph> family = kappa == 1 ? std::vector<Graph>{} : triangle_cover_extremal(n, kappa);
    json expected = {{"min_size", bound}};
    bool pass = s.exhaustive && s.value == bound;
    if (!family.empty()) {
      const std::vector<std::string> want = canonical_set(family);
      expected["extremal"] = want;
      pass = pass && s.witnesses == want;
    }
    result = verdict_json(a.claim, pass, expected, to_json(s));
    code = s.budget_exhausted ? kBudget : pass ? kHolds : kFails;
  } else if (a.claim == "thm5") {
    const int k = need(a.k, "--k");
    inputs["k"] = k;
    const Graph g = g_ring(k).graph;
    const CheckReport r = is_edge_pancyclic(g, budget_for(g.order(), a.budget));
    const bool pass = g.order() == g_ring_order(k) && g.size() == g_ring_size(k) && r.holds();
    result = verdict_json(a.claim, pass, {{"order", g_ring_order(k)}, {"size", g_ring_size(k)}, {"edge_pancyclic", true}},
                          {{"order", g.order()}, {"size", g.size()}, {"report", to_json(r)}});
    code = r.verdict == Verdict::unknown ? kBudget : pass ? kHolds : kFails;
  } else if (a.claim == "thm6") {
    const int n = need(a.n, "--n");
    inputs["n"] = n;
    inputs["exhaustive"] = a.exhaustive;
    const SearchOutcome s = max_diameter_edge_pancyclic(n, a.exhaustive, opt);
    const int bound = 2 * n / 5;
    const bool pass = s.value == bound && !s.budget_exhausted;
    result = verdict_json(a.claim, pass, {{"max_diameter", bound}}, to_json(s));
    code = s.budget_exhausted ? kBudget : pass ? kHolds : kFails;
  } else {
    const int k = need(a.k, "--k");
    inputs["k"] = k;
    const CheckReport r = verify_h_block_properties(k);
    result = verdict_json(a.claim, r.holds(), {{"properties", 6}}, to_json(r));
    code = verdict_code(r.verdict);
  }
  emit(io, envelope("verify " + a.claim, inputs, result, ms_since(t0)), false);
  return code;
}

// canon ----------------------------------------------------------------------

int do_canon(Io& io) {
  for (const Graph& g : read_graphs(io.in)) {
    io.out << emit_graph6(canonical_graph(g)) << ' ' << canonical_code(g).hex() << '\n';
  }
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Edge-pancyclic graph toolkit: constructions, checks and exhaustive searches", "epc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph family member");
  construct_cmd->add_option("family", ca.family, "cycle|path|complete|empty|wheel|fan|A|F|G|H|h_block|g_ring|q_graph|seq_join")
      ->required();
  construct_cmd->add_option("--n", ca.n, "Order parameter");
  construct_cmd->add_option("--k", ca.k, "Block parameter for h_block and g_ring");
  construct_cmd->add_option("--parts", ca.parts, "seq_join parts such as K1,C3,E2")->delimiter(',');
  construct_cmd->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"graph6", "dot"}));

  CheckArgs ka;
  auto* check_cmd = app.add_subcommand("check", "Check a predicate on graph6 read from standard input");
  check_cmd
      ->add_option("predicate", ka.predicate,
                   "triangle-cover|edge-pancyclic|vertex-pancyclic|pancyclic|layer-bounds|connectivity")
      ->required()
      ->check(CLI::IsMember(
          {"triangle-cover", "edge-pancyclic", "vertex-pancyclic", "pancyclic", "layer-bounds", "connectivity"}));
  check_cmd->add_option("--budget", ka.budget, "Node limit per (edge, length) probe; 0 = unlimited");
  check_cmd->add_option("--k", ka.k, "Required connectivity for the connectivity predicate");
  check_cmd->add_flag("--batch", ka.batch, "One JSON report per line");

  SpectrumArgs sa;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Per-edge cycle lengths of graph6 read from standard input");
  spectrum_cmd->add_option("--budget", sa.budget, "Node limit per (edge, length) probe; 0 = unlimited");
  spectrum_cmd->add_flag("--witnesses", sa.witnesses, "Include one cycle per found length");
  spectrum_cmd->add_flag("--batch", sa.batch, "One JSON report per line");

  SearchArgs ma, da;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive searches");
  search_cmd->require_subcommand(1);
  auto* min_cmd = search_cmd->add_subcommand("min-size", "Minimum size of graphs with a property");
  min_cmd->add_option("--order", ma.order, "Order n")->required();
  min_cmd->add_option("--predicate", ma.predicate, "edge-pancyclic|triangle-cover")
      ->required()
      ->check(CLI::IsMember({"edge-pancyclic", "triangle-cover"}));
  min_cmd->add_option("--kappa", ma.kappa, "Required connectivity for triangle-cover (1..3)");
  min_cmd->add_option("--stream", ma.stream, "Read candidate graphs from a graph6 file ('-' for standard input)");
  min_cmd->add_option("--budget", ma.budget, "Node limit per (edge, length) probe; 0 = unlimited");
  min_cmd->add_option("--workers", ma.workers, "Worker threads (default: EPC_WORKERS or all processors)");
  auto* diam_cmd = search_cmd->add_subcommand("max-diameter", "Maximum diameter of edge-pancyclic graphs");
  diam_cmd->add_option("--order", da.order, "Order n")->required();
  diam_cmd->add_flag("--exhaustive", da.exhaustive, "Census every edge-pancyclic graph (n <= 9)");
  diam_cmd->add_option("--budget", da.budget, "Node limit per (edge, length) probe; 0 = unlimited");
  diam_cmd->add_option("--workers", da.workers, "Worker threads (default: EPC_WORKERS or all processors)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Reproduce a stated result at given parameters");
  verify_cmd->add_option("claim", va.claim, "lemma1|lemma2|erdos|thm5|thm6|hk-props")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "erdos", "thm5", "thm6", "hk-props"}));
  verify_cmd->add_option("--n", va.n, "Order parameter");
  verify_cmd->add_option("--k", va.k, "Block parameter");
  verify_cmd->add_flag("--exhaustive", va.exhaustive, "thm6: exhaustive census instead of a constructed witness");
  verify_cmd->add_option("--budget", va.budget, "Node limit per (edge, length) probe; 0 = unlimited");
  verify_cmd->add_option("--workers", va.workers, "Worker threads");

  auto* canon_cmd = app.add_subcommand("canon", "Canonical graph6 and hex code for each graph6 line on standard input");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kHolds : kUsage;
  }

  try {
    if (*construct_cmd) return do_construct(io, ca);
    if (*check_cmd) return do_check(io, ka);
    if (*spectrum_cmd) return do_spectrum(io, sa);
    if (*min_cmd) return do_min_size(io, ma);
    if (*diam_cmd) return do_max_diameter(io, da);
    if (*verify_cmd) return do_verify(io, va);
    if (*canon_cmd) return do_canon(io);
  } catch (const Graph6Error& e) {
    err << "epc: malformed graph6: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "epc: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "epc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace epc::cli
