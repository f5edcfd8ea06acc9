#ifndef EPC_SEARCH_HPP
#define EPC_SEARCH_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epc/graph.hpp"

namespace epc {

/// Predicate applied to each candidate at the leaves. edge_pancyclic here
/// means nonempty and edge-pancyclic, so the edgeless graph never counts.
enum class Property { none, triangle_cover, edge_pancyclic };

std::string to_string(Property p);
std::optional<Property> property_from_name(const std::string& name);

/// Leaf conditions for enumerate_graphs. min_degree and connectivity are
/// checked on finished graphs; during augmentation they only drive bounds
/// that no supergraph within the size cap could beat (degree deficit,
/// component count), so no qualifying graph is ever cut off.
struct GraphFilter {
  int min_degree = 0;
  int connectivity = 0;
  int size_lo = 0;
  int size_hi = -1;  // -1: no cap, n(n-1)/2
  Property predicate = Property::none;
};

struct SearchOptions {
  /// Worker threads; 0 reads EPC_WORKERS, falling back to the hardware count.
  int workers = 0;
  /// Node ceiling per (edge, length) cycle probe; 0 is unlimited.
  long long node_limit = 0;
};

int resolve_workers(int requested);

struct StageCount {
  std::string stage;
  long long count = 0;
};

struct EnumerationStats {
  std::vector<long long> nodes_per_level;  // classes accepted at each edge count
  long long canon_calls = 0;
  std::vector<StageCount> stages;  // leaves surviving each filter stage
  long long unknown = 0;           // predicate probes cut off by node_limit
  int workers = 1;
  double elapsed_ms = 0;
};

struct Enumeration {
  std::vector<Graph> graphs;  // canonical forms, sorted by canonical code
  EnumerationStats stats;
};

/// Largest order the built-in generator accepts.
constexpr int kMaxGeneratorOrder = 12;

/// One representative (its canonical form) per isomorphism class of order-n
/// graphs passing `filter`. Built by canonical augmentation: starting from
/// the edgeless graph, a child P+e is kept iff deleting its canonical last
/// edge gives back a graph isomorphic to P, and isomorphic siblings are
/// merged.
Enumeration enumerate_graphs(int n, const GraphFilter& filter, const SearchOptions& options = {});

/// Same leaf filtering over an external graph6 stream (one graph per line,
/// any order; lines of other orders are skipped). Duplicates by isomorphism
/// are merged.
Enumeration filter_graph6_stream(std::istream& in, int n, const GraphFilter& filter,
                                 const SearchOptions& options = {});

struct SearchOutcome {
  std::string objective;
  std::optional<int> value;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::map<int, long long> census;     // objective value -> classes found there
  std::vector<int> sizes_searched;
  long long enumerated = 0;  // classes generated (or stream graphs read)
  long long passing = 0;
  std::vector<StageCount> stages;
  bool exhaustive = false;
  bool budget_exhausted = false;  // some probe hit the node limit
  std::string space;  // human-readable description of the covered space
  double elapsed_ms = 0;
};

/// Smallest size of an edge-pancyclic graph of order n (4 <= n <= 12),
/// ascending from ceil(3n/2) (edge-pancyclic forces min degree 3) with all
/// witnesses at that size.
SearchOutcome min_size_edge_pancyclic(int n, const SearchOptions& options = {});

/// As above over an external graph6 stream of order-n graphs.
SearchOutcome min_size_edge_pancyclic_stream(std::istream& in, int n, const SearchOptions& options = {});

/// Smallest size of a kappa-connected order-n graph with every edge in a
/// triangle (kappa in 1..3), ascending from the min-degree bound, with the
/// full extremal census.
SearchOutcome min_size_triangle_cover(int n, int kappa, const SearchOptions& options = {});

/// Largest diameter of an edge-pancyclic graph of order n. Exhaustive mode
/// (3 <= n <= 9) censuses every class; otherwise a constructed witness
/// (triangle, wheel, Q_n) is verified and reported.
SearchOutcome max_diameter_edge_pancyclic(int n, bool exhaustive, const SearchOptions& options = {});

/// All classes of order n with kappa >= `kappa` satisfying `predicate`, of
/// exactly `size` edges when given, otherwise of any size.
std::vector<Graph> extremal_census(int n, Property predicate, int kappa, std::optional<int> size,
                                   const SearchOptions& options = {});

}  // namespace epc

#endif  // EPC_SEARCH_HPP
