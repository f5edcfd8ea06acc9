#ifndef EPC_CHECKS_HPP
#define EPC_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "epc/graph.hpp"

namespace epc {

/// Inclusive integer range [lo, hi].
struct LengthRange {
  int lo = 0;
  int hi = -1;
};

enum class ProbeStatus { found, absent, unknown };

struct ProbeResult {
  ProbeStatus status = ProbeStatus::absent;
  std::vector<int> vertices;  // the path (or cycle) when found
  long long nodes = 0;
};

/// Exact-length simple path search. `node_limit` of 0 means unlimited;
/// exceeding it yields ProbeStatus::unknown, never a false `absent`.
struct PathQuery {
  int from = 0;
  int to = 0;
  int length = 0;
  std::optional<Edge> through;  // the path must use this edge
  long long node_limit = 0;
};

ProbeResult find_path(const Graph& g, const PathQuery& q);

/// A cycle of exactly `length` through edge e (closing back to its start).
ProbeResult find_cycle_through(const Graph& g, Edge e, int length, long long node_limit = 0);

/// Lengths in `targets` for which a simple (a,b)-path of that length exists.
std::vector<int> path_length_set(const Graph& g, int a, int b, LengthRange targets);

struct EdgeSpectrum {
  Edge edge;
  Row lengths = 0;   // bit l set: a cycle of length l through the edge exists
  Row unknown = 0;   // probes cut off by the node limit
  std::vector<std::vector<int>> witnesses;  // one cycle per found length when requested

  std::vector<int> length_list() const { return vertices_of(lengths); }
};

struct CycleSpectrum {
  int order = 0;
  std::vector<EdgeSpectrum> edges;
  bool complete = true;  // every absent length was certified absent
};

EdgeSpectrum edge_cycle_lengths(const Graph& g, Edge e, LengthRange targets, long long node_limit = 0,
                                bool keep_witnesses = false);

/// Spectrum of every edge over [3, n].
CycleSpectrum cycle_spectrum(const Graph& g, long long node_limit = 0);

enum class Verdict { holds, fails, unknown };

std::string to_string(Verdict v);

/// Machine-checkable evidence attached to a verdict. `kind` names what the
/// other fields mean: "cycle"/"path" (vertices in order, with length),
/// "uncovered-edge", "missing-cycle" (edge, length), "vertex-cut",
/// "layer-sizes" (values, vertices = {source}), "degree" (vertices = {v},
/// values = {deg}), "connectivity" (values = {kappa}).
struct Witness {
  std::string kind;
  std::vector<int> vertices;
  std::vector<int> values;
  std::optional<Edge> edge;
  std::optional<int> length;
};

struct CheckStats {
  long long nodes = 0;
  double elapsed_ms = 0;
};

struct CheckReport {
  std::string predicate;
  Verdict verdict = Verdict::holds;
  bool applicable = true;  // false for inapplicable sub-checks (reported as skipped)
  std::vector<Witness> evidence;
  std::vector<CheckReport> parts;
  CheckStats stats;

  bool holds() const { return verdict == Verdict::holds; }
};

/// Every edge uv has N(u) and N(v) intersecting; lists all uncovered edges
/// when false, one triangle per edge when true.
CheckReport has_triangle_cover(const Graph& g);

/// Every edge lies on a cycle of each length 3..n. On failure names the first
/// failing (edge, length) in edge-lexicographic, length-ascending order.
CheckReport is_edge_pancyclic(const Graph& g, long long node_limit = 0);
CheckReport is_vertex_pancyclic(const Graph& g, long long node_limit = 0);
CheckReport is_pancyclic(const Graph& g, long long node_limit = 0);

/// kappa(g) >= k, with kappa and a minimum cut as evidence.
CheckReport connectivity_report(const Graph& g, int k);

/// The six listed path and cycle properties of H(k), checked literally on
/// h_block(k), one part per property.
CheckReport verify_h_block_properties(int k);

/// Distance-layer inequalities from a peripheral vertex x (the smallest
/// index of maximum eccentricity): |V_1| >= 3, |V_{d-1}| + |V_d| >= 4 and
/// |V_i| + |V_{i+1}| >= 5 for 1 <= i <= d-2, plus min degree >= 3 and
/// 2-connectivity. Parts that do not apply at this order or diameter are
/// reported with applicable = false.
CheckReport verify_distance_layer_bounds(const Graph& g);

}  // namespace epc

#endif  // EPC_CHECKS_HPP
