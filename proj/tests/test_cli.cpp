#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "epc/canon.hpp"
#include "epc/checks.hpp"
#include "epc/cli.hpp"
#include "epc/families.hpp"
#include "epc/report.hpp"
#include "epc/search.hpp"

using namespace epc;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Drop the timing fields so results can be compared with direct calls.
json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace

TEST_CASE("construct") {
  const Result r = run_cli({"construct", "g_ring", "--k", "3", "--format", "graph6"});
  CHECK(r.code == cli::kHolds);
  const Graph g = parse_graph6(r.out.substr(0, r.out.find('\n')));
  CHECK(g.order() == 39);
  CHECK(g.size() == 75);

  const Result dot = run_cli({"construct", "wheel", "--n", "5", "--format", "dot"});
  CHECK(dot.out.find("label=\"hub\"") != std::string::npos);
  CHECK(run_cli({"construct", "seq_join", "--parts", "K1,C3,E2,C3,K1"}).out == emit_graph6(q_graph(10)) + "\n");
  CHECK(run_cli({"construct", "wheel"}).code == cli::kUsage);
  CHECK(run_cli({"construct", "nonsense", "--n", "4"}).code == cli::kUsage);
  CHECK(run_cli({"construct", "A", "--n", "7"}).code == cli::kUsage);
}

TEST_CASE("check exit codes and evidence") {
  const Result c4 = run_cli({"check", "edge-pancyclic"}, emit_graph6(cycle(4)) + "\n");
  CHECK(c4.code == cli::kFails);
  const json j = json::parse(c4.out);
  CHECK(j["command"] == "check");
  CHECK(j["result"]["holds"] == false);
  CHECK(j["result"]["evidence"][0]["kind"] == "missing-cycle");
  CHECK(j["result"]["evidence"][0]["length"] == 3);

  CHECK(run_cli({"check", "edge-pancyclic"}, emit_graph6(wheel(7).graph)).code == cli::kHolds);
  CHECK(run_cli({"check", "triangle-cover"}, emit_graph6(cycle(5))).code == cli::kFails);
  CHECK(run_cli({"check", "connectivity", "--k", "3"}, emit_graph6(wheel(7).graph)).code == cli::kHolds);
  CHECK(run_cli({"check", "layer-bounds"}, emit_graph6(q_graph(15))).code == cli::kHolds);
  CHECK(run_cli({"check", "edge-pancyclic", "--budget", "1"}, emit_graph6(g_ring(3).graph)).code != cli::kFails);
}

TEST_CASE("batch mode is line-delimited") {
  const std::string input = emit_graph6(complete(4)) + "\n" + emit_graph6(cycle(5)) + "\n";
  const Result r = run_cli({"check", "triangle-cover"}, input);
  CHECK(r.code == cli::kFails);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line)["command"] == "check");
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("malformed graph6 names the byte offset") {
  const Result r = run_cli({"check", "pancyclic"}, "C~ \n");
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("byte offset 2") != std::string::npos);
  CHECK(run_cli({"canon"}, "").code == cli::kUsage);
  CHECK(run_cli({"bogus"}).code == cli::kUsage);
  CHECK(run_cli({"check", "hamiltonian"}, "C~").code == cli::kUsage);
}

TEST_CASE("spectrum and canon") {
  const Result s = run_cli({"spectrum"}, emit_graph6(wheel(5).graph));
  CHECK(s.code == cli::kHolds);
  const json j = json::parse(s.out);
  CHECK(j["result"]["complete"] == true);
  CHECK(j["result"]["edges"].size() == 8);

  const Graph g = relabel(a_graph(8).graph, std::vector<int>{7, 6, 5, 4, 3, 2, 1, 0});
  const Result c = run_cli({"canon"}, emit_graph6(g));
  CHECK(c.out == emit_graph6(canonical_graph(g)) + " " + canonical_code(g).hex() + "\n");
}

TEST_CASE("search commands equal direct calls") {
  const Result r = run_cli({"search", "min-size", "--order", "6", "--predicate", "edge-pancyclic", "--workers", "2"});
  CHECK(r.code == cli::kHolds);
  CHECK(strip_timing(json::parse(r.out)["result"]) == strip_timing(to_json(min_size_edge_pancyclic(6))));

  const Result t = run_cli({"search", "min-size", "--order", "7", "--predicate", "triangle-cover", "--kappa", "2"});
  CHECK(strip_timing(json::parse(t.out)["result"]) == strip_timing(to_json(min_size_triangle_cover(7, 2))));

  const Result d = run_cli({"search", "max-diameter", "--order", "6", "--exhaustive"});
  CHECK(strip_timing(json::parse(d.out)["result"]) == strip_timing(to_json(max_diameter_edge_pancyclic(6, true))));
  CHECK(d.err.find("passing") != std::string::npos);
  CHECK(run_cli({"search", "min-size", "--order", "6"}).code == cli::kUsage);
}

TEST_CASE("verify commands") {
  const Result l2 = run_cli({"verify", "lemma2", "--n", "8"});
  CHECK(l2.code == cli::kHolds);
  const json j = json::parse(l2.out);
  CHECK(j["result"]["pass"] == true);
  CHECK(strip_timing(j["result"]["observed"]) == strip_timing(to_json(min_size_triangle_cover(8, 3))));
  CHECK(j["result"]["observed"]["witnesses"][0] == emit_graph6(canonical_graph(wheel(8).graph)));

  CHECK(run_cli({"verify", "lemma1", "--n", "9"}).code == cli::kHolds);
  CHECK(run_cli({"verify", "erdos", "--n", "7"}).code == cli::kHolds);
  CHECK(run_cli({"verify", "thm6", "--n", "12"}).code == cli::kHolds);
  CHECK(run_cli({"verify", "hk-props", "--k", "3"}).code == cli::kHolds);
  CHECK(run_cli({"verify", "lemma1"}).code == cli::kUsage);
}
