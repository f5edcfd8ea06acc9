#ifndef EPC_GRAPH_HPP
#define EPC_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace epc {

/// One adjacency row: bit v set means the row's vertex is adjacent to v.
using Row = std::uint64_t;

constexpr int kMaxOrder = 64;

inline constexpr Row bit(int v) { return Row{1} << v; }
inline constexpr Row low_bits(int n) { return n >= 64 ? ~Row{0} : bit(n) - 1; }
inline int popcount(Row r) { return std::popcount(r); }
inline int first_vertex(Row r) { return std::countr_zero(r); }

/// Thrown for malformed input: bad orders, endpoints, disconnected inputs
/// where a connected one is required, and so on.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graph6 decoding failure. `offset` is the zero-based byte offset of the
/// offending character in the input line.
class Graph6Error : public GraphError {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : GraphError(what + " at byte offset " + std::to_string(offset)), detail_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  /// Normalizes so that u < v.
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Small simple undirected graph on vertices 0..order-1, one 64-bit
/// neighbor row per vertex. Values are immutable once built; the only way to
/// "modify" one is through the copy-producing with_edge / without_edge.
class Graph {
 public:
  /// Edgeless graph of the given order.
  explicit Graph(int order = 1);

  /// Builds from symmetric rows; validates symmetry, loops and range.
  static Graph from_rows(int order, std::span<const Row> rows);

  int order() const { return order_; }
  int size() const { return size_; }
  Row neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return popcount(adj_[v]); }
  Row vertex_mask() const { return low_bits(order_); }
  std::span<const Row> rows() const { return {adj_.data(), static_cast<std::size_t>(order_)}; }

  /// Edges with u < v, lexicographic.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

  friend Graph with_edge(const Graph& g, Edge e);
  friend Graph without_edge(const Graph& g, Edge e);

 private:
  int order_ = 1;
  int size_ = 0;
  std::array<Row, kMaxOrder> adj_{};
};

/// Copy of g with edge e added. e must be a non-edge of g.
Graph with_edge(const Graph& g, Edge e);
/// Copy of g with edge e removed. e must be an edge of g.
Graph without_edge(const Graph& g, Edge e);

/// Builds the graph with exactly the given edges. Rejects orders outside
/// [1, 64], out-of-range endpoints, loops and duplicate edges.
Graph build_graph(int order, std::span<const Edge> edges);
Graph build_graph(int order, std::initializer_list<Edge> edges);

/// Relabels: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// graph6 supports orders 1..62 here; the extended size form is rejected.
constexpr int kMaxGraph6Order = 62;

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Undirected DOT text. Vertices ascending, edges lexicographic. `labels`,
/// when given, must have one entry per vertex.
std::string emit_dot(const Graph& g, std::span<const std::string> labels = {});

int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// Vertices reachable from `source` avoiding `removed` (source must not be in it).
Row reachable(const Graph& g, int source, Row removed = 0);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

struct DistanceLayers {
  int source = 0;
  std::vector<Row> layers;  // layers[i] = vertices at distance exactly i
  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
  std::vector<int> sizes() const;
};

/// BFS layers from x. Throws GraphError naming an unreached vertex when g is
/// disconnected.
DistanceLayers distance_layers(const Graph& g, int x);

/// Eccentricity of v; requires g connected.
int eccentricity(const Graph& g, int v);
/// Throws GraphError on disconnected input.
int diameter(const Graph& g);

/// Minimum vertex cut size; order-1 for complete graphs. Requires order >= 2.
int vertex_connectivity(const Graph& g);
/// A vertex set realizing vertex_connectivity; empty for complete graphs and
/// disconnected graphs.
std::vector<int> minimum_vertex_cut(const Graph& g);
bool is_k_connected(const Graph& g, int k);

std::vector<int> vertices_of(Row r);

}  // namespace epc

#endif  // EPC_GRAPH_HPP
