#include "epc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace epc {

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " outside [1, 64]");
  }
}

}  // namespace

Graph::Graph(int order) : order_(order) { check_order(order); }

Graph Graph::from_rows(int order, std::span<const Row> rows) {
  Graph g(order);
  if (rows.size() < static_cast<std::size_t>(order)) {
    throw GraphError("fewer rows than vertices");
  }
  const Row mask = low_bits(order);
  int bits = 0;
  for (int v = 0; v < order; ++v) {
    const Row r = rows[v];
    if (r & ~mask) throw GraphError("neighbor index out of range in row " + std::to_string(v));
    if (r & bit(v)) throw GraphError("loop at vertex " + std::to_string(v));
    g.adj_[v] = r;
    bits += popcount(r);
  }
  for (int v = 0; v < order; ++v) {
    for (Row r = g.adj_[v]; r; r &= r - 1) {
      if (!g.adjacent(first_vertex(r), v)) throw GraphError("asymmetric adjacency rows");
    }
  }
  g.size_ = bits / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u < order_; ++u) {
    for (Row r = adj_[u] & ~low_bits(u + 1); r; r &= r - 1) out.emplace_back(u, first_vertex(r));
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.order_ == b.order_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
}

Graph with_edge(const Graph& g, Edge e) {
  if (e.u == e.v || e.v >= g.order_ || e.u < 0) throw GraphError("invalid edge");
  if (g.adjacent(e.u, e.v)) throw GraphError("edge already present");
  Graph h = g;
  h.adj_[e.u] |= bit(e.v);
  h.adj_[e.v] |= bit(e.u);
  ++h.size_;
  return h;
}

Graph without_edge(const Graph& g, Edge e) {
  if (e.u == e.v || e.v >= g.order_ || e.u < 0 || !g.adjacent(e.u, e.v)) {
    throw GraphError("edge not present");
  }
  Graph h = g;
  h.adj_[e.u] &= ~bit(e.v);
  h.adj_[e.v] &= ~bit(e.u);
  --h.size_;
  return h;
}

Graph build_graph(int order, std::span<const Edge> edges) {
  check_order(order);
  std::array<Row, kMaxOrder> rows{};
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (rows[e.u] & bit(e.v)) {
      throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
  }
  return Graph::from_rows(order, rows);
}

Graph build_graph(int order, std::initializer_list<Edge> edges) {
  return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) throw GraphError("permutation size mismatch");
  Row seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p))) throw GraphError("not a permutation");
    seen |= bit(p);
  }
  std::array<Row, kMaxOrder> rows{};
  for (int v = 0; v < n; ++v) {
    Row r = 0;
    for (Row nb = g.neighbors(v); nb; nb &= nb - 1) r |= bit(perm[first_vertex(nb)]);
    rows[perm[v]] = r;
  }
  return Graph::from_rows(n, rows);
}

// graph6: one byte n+63, then the upper triangle read column by column
// ((0,1),(0,2),(1,2),(0,3),...), six bits per byte, most significant first,
// zero padded, each byte offset by 63.

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 line", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("character outside graph6 range 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) throw Graph6Error("extended-size graph6 form not supported", 0);
  if (n == 0) throw Graph6Error("graph6 order 0 not supported", 0);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() < body + 1) throw Graph6Error("truncated graph6 bit stream", text.size());
  if (text.size() > body + 1) throw Graph6Error("trailing data after graph6 bit stream", body + 1);

  std::array<Row, kMaxOrder> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  for (; k < body * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw Graph6Error("nonzero graph6 padding bit", 1 + k / 6);
  }
  return Graph::from_rows(n, rows);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw GraphError("graph6 output limited to order 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string emit_dot(const Graph& g, std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(g.order())) {
    throw GraphError("label count does not match order");
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (!labels.empty()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<int> vertices_of(Row r) {
  std::vector<int> out;
  for (; r; r &= r - 1) out.push_back(first_vertex(r));
  return out;
}

Row reachable(const Graph& g, int source, Row removed) {
  const Row allowed = g.vertex_mask() & ~removed;
  Row seen = bit(source);
  Row frontier = seen;
  while (frontier) {
    Row next = 0;
    for (Row f = frontier; f; f &= f - 1) next |= g.neighbors(first_vertex(f));
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g) { return reachable(g, 0) == g.vertex_mask(); }

int component_count(const Graph& g) {
  int count = 0;
  for (Row left = g.vertex_mask(); left; ++count) left &= ~reachable(g, first_vertex(left));
  return count;
}

std::vector<int> DistanceLayers::sizes() const {
  std::vector<int> out;
  out.reserve(layers.size());
  for (Row r : layers) out.push_back(popcount(r));
  return out;
}

DistanceLayers distance_layers(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw GraphError("source vertex out of range");
  DistanceLayers out;
  out.source = x;
  Row seen = bit(x);
  Row frontier = seen;
  while (frontier) {
    out.layers.push_back(frontier);
    Row next = 0;
    for (Row f = frontier; f; f &= f - 1) next |= g.neighbors(first_vertex(f));
    frontier = next & ~seen;
    seen |= frontier;
  }
  if (seen != g.vertex_mask()) {
    throw GraphError("graph is disconnected: vertex " + std::to_string(first_vertex(g.vertex_mask() & ~seen)) +
                     " unreachable from " + std::to_string(x));
  }
  return out;
}

int eccentricity(const Graph& g, int v) { return distance_layers(g, v).eccentricity(); }

int diameter(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, eccentricity(g, v));
  return d;
}

namespace {

// Unit-capacity vertex-split network: vertex v becomes in=2v, out=2v+1.
// Returns the maximum number of internally disjoint s-t paths, stopping
// early once `limit` is reached, and the source side of the residual cut.
struct LocalConnectivity {
  int paths = 0;
  std::vector<char> source_side;
};

LocalConnectivity local_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  for (int v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    // edge arcs never bind, so a minimum cut consists of vertex arcs only
    for (Row r = g.neighbors(v); r; r &= r - 1) at(2 * v + 1, 2 * first_vertex(r)) = n;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  LocalConnectivity out;
  std::vector<int> parent(nodes);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t qi = 0; qi < queue.size() && parent[sink] < 0; ++qi) {
      const int a = queue[qi];
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0 || out.paths >= limit) {
      out.source_side.assign(nodes, 0);
      for (int v = 0; v < nodes; ++v) out.source_side[v] = parent[v] >= 0;
      return out;
    }
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++out.paths;
  }
}

}  // namespace

std::vector<int> minimum_vertex_cut(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw GraphError("vertex connectivity needs order >= 2");
  if (!is_connected(g)) return {};
  int best = n - 1;
  std::vector<int> cut;
  // Even's scheme: some vertex among the first best+1 avoids a minimum cut.
  for (int i = 0; i < n && i <= best; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      const LocalConnectivity lc = local_connectivity(g, i, j, n);
      if (lc.paths < best || cut.empty()) {
        best = lc.paths;
        cut.clear();
        for (int v = 0; v < n; ++v) {
          if (lc.source_side[2 * v] && !lc.source_side[2 * v + 1]) cut.push_back(v);
        }
      }
    }
  }
  return cut;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw GraphError("vertex connectivity needs order >= 2");
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int i = 0; i < n && i <= best; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) best = std::min(best, local_connectivity(g, i, j, best).paths);
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() <= k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  if (k == 2) {
    for (int v = 0; v < g.order(); ++v) {
      const int start = v == 0 ? 1 : 0;
      if ((reachable(g, start, bit(v)) | bit(v)) != g.vertex_mask()) return false;
    }
    return true;
  }
  if (k == 3 && min_degree(g) < 3) return false;
  return vertex_connectivity(g) >= k;
}

}  // namespace epc
