// End-to-end acceptance run: one PASS/FAIL line per criterion. Brute-force
// oracles from oracles.hpp re-check what the library reports wherever the
// instance is small enough.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epc/canon.hpp"
#include "epc/checks.hpp"
#include "epc/families.hpp"
#include "epc/search.hpp"
#include "oracles.hpp"

using namespace epc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  // Records a failed expectation; the first few go into the note.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note << " | failed:";
    if (failures++ < 5) note << ' ' << what << ';';
    pass = false;
  }
  int failures = 0;
};

std::string g6(const Graph& g) { return emit_graph6(canonical_graph(g)); }

std::vector<std::string> g6_set(std::initializer_list<Graph> graphs) {
  std::vector<std::string> out;
  for (const Graph& g : graphs) out.push_back(g6(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Edge-pancyclic graphs met along the way, re-used for the layer checks.
std::vector<Graph> g_found_edge_pancyclic;

void edge_pancyclic_min_size(Outcome& v) {
  std::vector<int> values;
  for (int n = 4; n <= 9; ++n) {
    const SearchOutcome s = min_size_edge_pancyclic(n);
    values.push_back(s.value.value_or(-1));
    v.expect(s.exhaustive, "n=" + std::to_string(n) + " not exhaustive");
    v.expect(s.value == 2 * n - 2, "n=" + std::to_string(n) + " min " + std::to_string(s.value.value_or(-1)));
    v.expect(!s.witnesses.empty(), "no witness");
    for (const std::string& w : s.witnesses) {
      const Graph g = parse_graph6(w);
      v.expect(g.size() == 2 * n - 2 && oracle::edge_pancyclic(g), "witness rejected by oracle");
      g_found_edge_pancyclic.push_back(g);
    }
  }
  v.note << "min sizes for n=4..9: " << join_ints(values) << " (2n-2 each, exhaustive)";
}

void small_order_census(Outcome& v) {
  for (int n : {4, 5}) {
    const std::vector<Graph> census = extremal_census(n, Property::edge_pancyclic, 0, std::nullopt);
    std::set<CanonicalCode> got, oracle_codes;
    for (const Graph& g : census) got.insert(canonical_code(g));
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      if (oracle::edge_pancyclic(g)) oracle_codes.insert(canonical_code(g));
    }
    v.expect(got == oracle_codes, "census differs from labeled oracle at n=" + std::to_string(n));
    std::vector<int> sizes;
    for (const Graph& g : census) {
      sizes.push_back(g.size());
      g_found_edge_pancyclic.push_back(g);
    }
    std::sort(sizes.begin(), sizes.end());
    if (n == 4) {
      v.expect(census.size() == 1 && are_isomorphic(census.front(), complete(4)), "order 4 is not exactly {K4}");
      v.note << "order 4: {K4}; ";
    } else {
      v.expect(sizes == std::vector<int>{8, 9, 10}, "order 5 sizes " + join_ints(sizes));
      v.note << "order 5: " << census.size() << " graphs, sizes {" << join_ints(sizes) << "}";
    }
  }
}

void two_connected_triangle_cover(Outcome& v) {
  std::vector<int> values;
  for (int n = 6; n <= 11; ++n) {
    const SearchOutcome s = min_size_triangle_cover(n, 2);
    values.push_back(s.value.value_or(-1));
    v.expect(s.exhaustive && s.value == (3 * n + 1) / 2, "n=" + std::to_string(n) + " min");
    if (n >= 8) {
      const std::vector<std::string> want =
          n % 2 == 0 ? g6_set({a_graph(n).graph})
                     : g6_set({odd_extremal(OddKind::F, n).graph, odd_extremal(OddKind::G, n).graph,
                               odd_extremal(OddKind::H, n).graph});
      v.expect(s.witnesses == want, "extremal set differs at n=" + std::to_string(n));
    }
    for (const std::string& w : s.witnesses) {
      const Graph g = parse_graph6(w);
      v.expect(oracle::triangle_cover(g) && oracle::connectivity(g) >= 2, "witness rejected by oracle");
    }
  }
  v.note << "min sizes for n=6..11: " << join_ints(values)
         << "; extremal sets {A_8}, {F_9,G_9,H_9}, {A_10}, {F_11,G_11,H_11}";
}

void three_connected_triangle_cover(Outcome& v) {
  std::vector<int> values;
  for (int n = 4; n <= 9; ++n) {
    const SearchOutcome s = min_size_triangle_cover(n, 3);
    values.push_back(s.value.value_or(-1));
    v.expect(s.exhaustive && s.value == 2 * n - 2, "n=" + std::to_string(n) + " min");
    v.expect(s.witnesses == g6_set({wheel(n).graph}), "extremal set is not {W_n} at n=" + std::to_string(n));
  }
  const std::vector<Graph> five = extremal_census(5, Property::triangle_cover, 3, std::nullopt);
  std::set<CanonicalCode> oracle_codes;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph g = oracle::from_mask(5, mask);
    if (oracle::triangle_cover(g) && oracle::connectivity(g) >= 3) oracle_codes.insert(canonical_code(g));
  }
  v.expect(five.size() == 3 && oracle_codes.size() == 3, "order-5 3-connected census");
  v.note << "min sizes for n=4..9: " << join_ints(values) << ", unique W_n; order 5 census: " << five.size();
}

void connected_triangle_cover(Outcome& v) {
  std::vector<int> values;
  for (int n = 4; n <= 10; ++n) {
    const SearchOutcome s = min_size_triangle_cover(n, 1);
    values.push_back(s.value.value_or(-1));
    v.expect(s.exhaustive && s.value == (3 * n - 2) / 2, "n=" + std::to_string(n) + " min");
  }
  v.note << "min sizes for n=4..10: " << join_ints(values);
}

bool literal_cycle(const Graph& g, const std::vector<int>& c, Edge e, int length) {
  if (static_cast<int>(c.size()) != length) return false;
  Row seen = 0;
  bool uses = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int a = c[i], b = c[(i + 1) % c.size()];
    if (seen & bit(a) || !g.adjacent(a, b)) return false;
    seen |= bit(a);
    uses = uses || Edge(a, b) == e;
  }
  return uses;
}

void ring_edge_pancyclic(Outcome& v) {
  const Graph g = g_ring(3).graph;
  v.expect(g.order() == 39 && g.size() == 75, "order/size");
  const CheckReport r = is_edge_pancyclic(g);
  v.expect(r.holds(), "is_edge_pancyclic verdict " + to_string(r.verdict));
  const Row full = low_bits(40) & ~low_bits(3);
  long long witnessed = 0;
  for (const Edge& e : g.edges()) {
    const EdgeSpectrum s = edge_cycle_lengths(g, e, {3, 39}, 0, true);
    v.expect(s.lengths == full && s.unknown == 0, "edge spectrum incomplete");
    const std::vector<int> lengths = s.length_list();
    for (std::size_t i = 0; i < lengths.size() && i < s.witnesses.size(); ++i) {
      if (literal_cycle(g, s.witnesses[i], e, lengths[i])) ++witnessed;
    }
  }
  v.expect(witnessed == 75 * 37, "literal witnesses " + std::to_string(witnessed));
  v.note << "order 39, size 75, " << witnessed << " literal (edge, length) witness cycles of 2775";
}

void h_block_battery(Outcome& v) {
  for (int k = 3; k <= 5; ++k) {
    const CheckReport r = verify_h_block_properties(k);
    v.expect(r.holds() && r.parts.size() == 6, "k=" + std::to_string(k));
  }
  v.note << "six properties hold for k=3,4,5";
}

void max_diameter(Outcome& v) {
  for (int n = 10; n <= 25; ++n) {
    const Graph q = q_graph(n);
    v.expect(is_edge_pancyclic(q).holds(), "Q_" + std::to_string(n) + " not edge-pancyclic");
    v.expect(diameter(q) == 2 * n / 5 && oracle::diameter(q) == 2 * n / 5, "Q_" + std::to_string(n) + " diameter");
  }
  for (int n = 3; n <= 7; ++n) {
    const SearchOutcome s = max_diameter_edge_pancyclic(n, false);
    v.expect(s.value == 2 * n / 5, "witness n=" + std::to_string(n));
    for (const std::string& w : s.witnesses) v.expect(oracle::edge_pancyclic(parse_graph6(w)), "witness oracle");
  }
  std::vector<int> maxima;
  for (int n = 6; n <= 8; ++n) {
    const SearchOutcome s = max_diameter_edge_pancyclic(n, true);
    maxima.push_back(s.value.value_or(-1));
    v.expect(s.exhaustive && s.value == 2 * n / 5, "exhaustive n=" + std::to_string(n));
    for (const std::string& w : s.witnesses) g_found_edge_pancyclic.push_back(parse_graph6(w));
  }
  v.note << "Q_10..Q_25 edge-pancyclic with diameter floor(2n/5); C_3/wheels for n=3..7; exhaustive maxima n=6..8: "
         << join_ints(maxima);
}

void layer_inequalities(Outcome& v) {
  std::vector<Graph> graphs = g_found_edge_pancyclic;
  for (int n = 13; n <= 25; ++n) graphs.push_back(q_graph(n));  // diameter >= 5 from n = 13
  int checked = 0;
  for (const Graph& g : graphs) {
    const CheckReport r = verify_distance_layer_bounds(g);
    v.expect(r.holds(), "layer bounds fail on " + emit_graph6(g));
    v.expect(min_degree(g) >= 3 && vertex_connectivity(g) >= 2, "degree/connectivity on " + emit_graph6(g));
    ++checked;
  }
  v.expect(checked > 0, "nothing to check");
  v.note << checked << " graphs: |V_1|>=3, |V_{d-1}|+|V_d|>=4, |V_i|+|V_{i+1}|>=5, min degree >= 3, 2-connected";
}

void infrastructure(Outcome& v) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(1, kMaxGraph6Order);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  int roundtrips = 0;
  for (int t = 0; t < 10000; ++t) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    roundtrips += parse_graph6(emit_graph6(g)) == g;
  }
  v.expect(roundtrips == 10000, "graph6 roundtrip");

  int invariant = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 4 + t % 7;
    const Graph g = oracle::random_graph(n, 0.15 + 0.07 * (t % 10), rng);
    const CanonicalCode code = canonical_code(g);
    bool ok = true;
    for (int r = 0; r < 10; ++r) ok = ok && canonical_code(relabel(g, oracle::random_permutation(n, rng))) == code;
    invariant += ok;
  }
  v.expect(invariant == 1000, "canonical invariance");

  const long long expected[] = {1, 2, 4, 11, 34, 156, 1044};
  std::vector<int> counts;
  for (int n = 1; n <= 7; ++n) {
    const long long generated = static_cast<long long>(enumerate_graphs(n, {}).graphs.size());
    std::set<CanonicalCode> codes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      codes.insert(canonical_code(oracle::from_mask(n, mask)));
    }
    const long long burnside = oracle::class_count(n);
    counts.push_back(static_cast<int>(generated));
    v.expect(generated == expected[n - 1] && static_cast<long long>(codes.size()) == burnside &&
                 burnside == expected[n - 1],
             "class count n=" + std::to_string(n));
  }

  GraphFilter connected;
  connected.connectivity = 1;
  int spectra = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, connected).graphs) {
      const auto want = oracle::cycle_lengths(g);
      bool ok = true;
      for (const Edge& e : g.edges()) {
        const EdgeSpectrum s = edge_cycle_lengths(g, e, {3, n});
        for (int l = 3; l <= n; ++l) ok = ok && (((s.lengths >> l) & 1) == want.at({e.u, e.v})[l]);
      }
      spectra += ok;
      v.expect(ok, "spectrum differs on " + emit_graph6(g));
    }
  }
  v.note << "10000 graph6 roundtrips; 1000x10 relabelings; classes " << join_ints(counts) << "; " << spectra
         << " connected graphs of order <= 7 match cycle enumeration";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"edge-pancyclic-min-size", edge_pancyclic_min_size},
      {"order-4-5-edge-pancyclic-census", small_order_census},
      {"2-connected-triangle-cover-extremal", two_connected_triangle_cover},
      {"3-connected-triangle-cover-extremal", three_connected_triangle_cover},
      {"connected-triangle-cover-minimum", connected_triangle_cover},
      {"ring-construction-edge-pancyclic", ring_edge_pancyclic},
      {"h-block-properties", h_block_battery},
      {"max-diameter-witnesses", max_diameter},
      {"distance-layer-inequalities", layer_inequalities},
      {"infrastructure-oracles", infrastructure},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && only != criteria[i].name) continue;
    Outcome v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2zu %-38s %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, v.note.str().c_str(),
                secs);
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
