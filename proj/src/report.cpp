#include "epc/report.hpp"

#include <cmath>

namespace epc {

using nlohmann::json;

namespace {

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json stats_json(const CheckStats& s) {
  return {{"nodes", s.nodes}, {"elapsed_ms", std::llround(s.elapsed_ms)}};
}

}  // namespace

json to_json(const Witness& w) {
  json j = {{"kind", w.kind}};
  if (!w.vertices.empty()) j["vertices"] = w.vertices;
  if (!w.values.empty()) j["values"] = w.values;
  if (w.edge) j["edge"] = edge_json(*w.edge);
  if (w.length) j["length"] = *w.length;
  return j;
}

json to_json(const CheckReport& r) {
  json j = {
      {"predicate", r.predicate},
      {"verdict", to_string(r.verdict)},
      {"holds", r.holds()},
      {"applicable", r.applicable},
      {"evidence", json::array()},
      {"stats", stats_json(r.stats)},
  };
  for (const Witness& w : r.evidence) j["evidence"].push_back(to_json(w));
  if (!r.parts.empty()) {
    j["parts"] = json::array();
    for (const CheckReport& p : r.parts) j["parts"].push_back(to_json(p));
  }
  return j;
}

json to_json(const EdgeSpectrum& s) {
  json j = {{"edge", edge_json(s.edge)}, {"lengths", s.length_list()}, {"unknown", vertices_of(s.unknown)}};
  if (!s.witnesses.empty()) j["witnesses"] = s.witnesses;
  return j;
}

json to_json(const CycleSpectrum& s) {
  json j = {{"order", s.order}, {"complete", s.complete}, {"edges", json::array()}};
  for (const EdgeSpectrum& e : s.edges) j["edges"].push_back(to_json(e));
  return j;
}

json to_json(const SearchOutcome& s) {
  json census = json::array();
  for (const auto& [value, count] : s.census) census.push_back({{"value", value}, {"count", count}});
  json stages = json::array();
  for (const StageCount& c : s.stages) stages.push_back({{"stage", c.stage}, {"count", c.count}});
  return {
      {"objective", s.objective},
      {"value", s.value ? json(*s.value) : json(nullptr)},
      {"witnesses", s.witnesses},
      {"census", census},
      {"sizes_searched", s.sizes_searched},
      {"counts", {{"enumerated", s.enumerated}, {"passing", s.passing}, {"stages", stages}}},
      {"exhaustive", s.exhaustive},
      {"budget_exhausted", s.budget_exhausted},
      {"space", s.space},
      {"elapsed_ms", std::llround(s.elapsed_ms)},
  };
}

json envelope(const std::string& command, json inputs, json result, double elapsed_ms) {
  return {
      {"command", command},
      {"inputs", std::move(inputs)},
      {"result", std::move(result)},
      {"version", kToolVersion},
      {"elapsed_ms", std::llround(elapsed_ms)},
  };
}

}  // namespace epc
