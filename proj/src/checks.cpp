#include "epc/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "epc/families.hpp"

namespace epc {

namespace {

// Depth-first search for a simple path of exact length. A branch is cut when
// the target is unreachable through unused vertices, when the BFS distance
// to the target exceeds the remaining length, when fewer unused vertices are
// reachable than the path still needs, or, when every reachable vertex must
// be used, when one of them has too few usable neighbors.
class PathFinder {
 public:
  PathFinder(const Graph& g, const PathQuery& q) : g_(g), q_(q), mask_(g.vertex_mask()) {}

  ProbeResult run() {
    const int n = g_.order();
    if (q_.from < 0 || q_.from >= n || q_.to < 0 || q_.to >= n) throw GraphError("path endpoint out of range");
    if (q_.from == q_.to) throw GraphError("path endpoints must differ");
    ProbeResult out;
    if (q_.length < 1 || q_.length >= n) return out;
    if (q_.through && !g_.adjacent(q_.through->u, q_.through->v)) return out;
    path_.assign(1, q_.from);
    const bool ok = dfs(q_.from, bit(q_.from), 0, !q_.through.has_value());
    out.nodes = nodes_;
    if (ok) {
      out.status = ProbeStatus::found;
      out.vertices = path_;
    } else {
      out.status = aborted_ ? ProbeStatus::unknown : ProbeStatus::absent;
    }
    return out;
  }

 private:
  bool dfs(int cur, Row used, int len, bool via_done) {
    ++nodes_;
    if (q_.node_limit > 0 && nodes_ > q_.node_limit) {
      aborted_ = true;
      return false;
    }
    const int target = q_.to;
    const int rem = q_.length - len;
    if (cur == target) return rem == 0 && via_done;
    if (rem <= 0) return false;

    const Row avail = mask_ & ~used;
    // Layered BFS from cur through unused vertices; the target is reached
    // but never expanded.
    std::array<Row, kMaxOrder + 1> layer;
    int layers = 0;
    Row seen = 0;
    Row frontier = bit(cur);
    int dist_target = -1;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier & ~bit(target); f; f &= f - 1) next |= g_.neighbors(first_vertex(f));
      next &= avail & ~seen;
      if (!next) break;
      layer[layers++] = next;
      if ((next & bit(target)) && dist_target < 0) dist_target = layers;
      seen |= next;
      frontier = next;
    }
    if (dist_target < 0 || dist_target > rem) return false;
    const int reach = popcount(seen);
    if (reach < rem) return false;

    Row forced = ~Row{0};
    if (!via_done) {
      const int x = q_.through->u, y = q_.through->v;
      if (cur == x || cur == y) {
        const int other = cur == x ? y : x;
        if (!(avail & bit(other))) return false;
        forced = bit(other);
      } else {
        if (!(seen & bit(x)) || !(seen & bit(y))) return false;
        if (via_lower_bound(layer, layers, avail, x, y) > rem) return false;
      }
    }

    if (reach == rem) {
      const Row pool = seen | bit(cur);
      for (Row r = seen & ~bit(target); r; r &= r - 1) {
        if (popcount(g_.neighbors(first_vertex(r)) & pool) < 2) return false;
      }
    }

    Row cand = g_.neighbors(cur) & avail & forced;
    cand = rem > 1 ? (cand & ~bit(target)) : (cand & bit(target));
    // Fewest onward options first.
    std::array<std::pair<int, int>, kMaxOrder> order;
    int count = 0;
    for (Row r = cand; r; r &= r - 1) {
      const int c = first_vertex(r);
      order[count++] = {popcount(g_.neighbors(c) & avail), c};
    }
    std::sort(order.begin(), order.begin() + count);
    for (int i = 0; i < count; ++i) {
      const int c = order[i].second;
      path_.push_back(c);
      const bool done = via_done || Edge(cur, c) == *q_.through;
      if (dfs(c, used | bit(c), len + 1, done)) return true;
      path_.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  // Shortest cur -> ... -> (x,y) -> ... -> target route, as a lower bound on
  // the remaining length.
  int via_lower_bound(const std::array<Row, kMaxOrder + 1>& layer, int layers, Row avail, int x, int y) const {
    auto dist_from_cur = [&](int v) {
      for (int i = 0; i < layers; ++i) {
        if (layer[i] & bit(v)) return i + 1;
      }
      return kMaxOrder * 2;
    };
    // BFS from the target through unused vertices.
    std::array<int, kMaxOrder> dt;
    dt.fill(kMaxOrder * 2);
    dt[q_.to] = 0;
    Row seen = bit(q_.to);
    Row frontier = seen;
    for (int d = 1; frontier; ++d) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) next |= g_.neighbors(first_vertex(f));
      next &= avail & ~seen;
      for (Row r = next; r; r &= r - 1) dt[first_vertex(r)] = d;
      seen |= next;
      frontier = next;
    }
    return std::min(dist_from_cur(x) + 1 + dt[y], dist_from_cur(y) + 1 + dt[x]);
  }

  const Graph& g_;
  const PathQuery& q_;
  const Row mask_;
  std::vector<int> path_;
  long long nodes_ = 0;
  bool aborted_ = false;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Per-edge cycle-length knowledge shared by the pancyclicity predicates.
// A found cycle is a literal witness for every edge on it at its length.
class CycleOracle {
 public:
  CycleOracle(const Graph& g, long long node_limit) : g_(g), edges_(g.edges()), limit_(node_limit) {
    index_.fill(-1);
    for (std::size_t i = 0; i < edges_.size(); ++i) index_[key(edges_[i])] = static_cast<int>(i);
    known_.assign(edges_.size(), 0);
  }

  const std::vector<Edge>& edges() const { return edges_; }
  long long nodes() const { return nodes_; }

  ProbeStatus probe(int ei, int length) {
    if (known_[ei] & bit(length)) return ProbeStatus::found;
    const ProbeResult r = find_cycle_through(g_, edges_[ei], length, limit_);
    nodes_ += r.nodes;
    if (r.status == ProbeStatus::found) {
      const auto& c = r.vertices;
      for (std::size_t i = 0; i < c.size(); ++i) {
        known_[index_[key(Edge(c[i], c[(i + 1) % c.size()]))]] |= bit(length);
      }
    }
    return r.status;
  }

 private:
  static int key(Edge e) { return e.u * kMaxOrder + e.v; }

  const Graph& g_;
  std::vector<Edge> edges_;
  long long limit_;
  std::array<int, kMaxOrder * kMaxOrder> index_;
  std::vector<Row> known_;
  long long nodes_ = 0;
};

void require_order3(const Graph& g) {
  if (g.order() < 3) throw GraphError("pancyclicity predicates need order >= 3");
}

Witness missing_cycle(Edge e, int length) { return Witness{"missing-cycle", {}, {}, e, length}; }

Verdict combine(bool any_fail, bool any_unknown) {
  return any_fail ? Verdict::fails : any_unknown ? Verdict::unknown : Verdict::holds;
}

}  // namespace

ProbeResult find_path(const Graph& g, const PathQuery& q) { return PathFinder(g, q).run(); }

ProbeResult find_cycle_through(const Graph& g, Edge e, int length, long long node_limit) {
  if (!g.adjacent(e.u, e.v)) throw GraphError("not an edge: " + std::to_string(e.u) + "-" + std::to_string(e.v));
  if (length < 3 || length > g.order()) return {};
  const Graph h = without_edge(g, e);
  return find_path(h, PathQuery{e.u, e.v, length - 1, std::nullopt, node_limit});
}

std::vector<int> path_length_set(const Graph& g, int a, int b, LengthRange targets) {
  std::vector<int> out;
  for (int l = std::max(targets.lo, 1); l <= targets.hi; ++l) {
    if (find_path(g, PathQuery{a, b, l}).status == ProbeStatus::found) out.push_back(l);
  }
  return out;
}

EdgeSpectrum edge_cycle_lengths(const Graph& g, Edge e, LengthRange targets, long long node_limit,
                                bool keep_witnesses) {
  if (!g.adjacent(e.u, e.v)) throw GraphError("not an edge: " + std::to_string(e.u) + "-" + std::to_string(e.v));
  EdgeSpectrum out{e};
  const Graph h = without_edge(g, e);
  for (int l = std::max(targets.lo, 3); l <= std::min(targets.hi, g.order()); ++l) {
    const ProbeResult r = find_path(h, PathQuery{e.u, e.v, l - 1, std::nullopt, node_limit});
    if (r.status == ProbeStatus::found) {
      out.lengths |= bit(l);
      if (keep_witnesses) out.witnesses.push_back(r.vertices);
    } else if (r.status == ProbeStatus::unknown) {
      out.unknown |= bit(l);
    }
  }
  return out;
}

CycleSpectrum cycle_spectrum(const Graph& g, long long node_limit) {
  CycleSpectrum out;
  out.order = g.order();
  for (const Edge& e : g.edges()) {
    out.edges.push_back(edge_cycle_lengths(g, e, {3, g.order()}, node_limit));
    if (out.edges.back().unknown) out.complete = false;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

CheckReport has_triangle_cover(const Graph& g) {
  const auto start = Clock::now();
  CheckReport rep{"triangle-cover"};
  std::vector<Witness> triangles;
  for (const Edge& e : g.edges()) {
    const Row common = g.neighbors(e.u) & g.neighbors(e.v);
    if (!common) {
      rep.evidence.push_back(Witness{"uncovered-edge", {}, {}, e, std::nullopt});
    } else {
      triangles.push_back(Witness{"cycle", {e.u, e.v, first_vertex(common)}, {}, e, 3});
    }
  }
  if (rep.evidence.empty()) {
    rep.evidence = std::move(triangles);
  } else {
    rep.verdict = Verdict::fails;
  }
  rep.stats.elapsed_ms = ms_since(start);
  return rep;
}

CheckReport is_edge_pancyclic(const Graph& g, long long node_limit) {
  require_order3(g);
  const auto start = Clock::now();
  CheckReport rep{"edge-pancyclic"};
  CycleOracle oracle(g, node_limit);
  bool unknown = false;
  for (std::size_t ei = 0; ei < oracle.edges().size() && rep.verdict != Verdict::fails; ++ei) {
    for (int l = 3; l <= g.order(); ++l) {
      const ProbeStatus s = oracle.probe(static_cast<int>(ei), l);
      if (s == ProbeStatus::absent) {
        rep.verdict = Verdict::fails;
        rep.evidence.push_back(missing_cycle(oracle.edges()[ei], l));
        break;
      }
      if (s == ProbeStatus::unknown && !unknown) {
        unknown = true;
        rep.evidence.push_back(Witness{"unknown-probe", {}, {}, oracle.edges()[ei], l});
      }
    }
  }
  if (rep.verdict != Verdict::fails) rep.verdict = combine(false, unknown);
  rep.stats = {oracle.nodes(), ms_since(start)};
  return rep;
}

CheckReport is_vertex_pancyclic(const Graph& g, long long node_limit) {
  require_order3(g);
  const auto start = Clock::now();
  CheckReport rep{"vertex-pancyclic"};
  CycleOracle oracle(g, node_limit);
  const auto& edges = oracle.edges();
  bool unknown = false;
  for (int v = 0; v < g.order() && rep.verdict != Verdict::fails; ++v) {
    for (int l = 3; l <= g.order(); ++l) {
      bool found = false;
      bool open = false;
      for (std::size_t ei = 0; ei < edges.size() && !found; ++ei) {
        if (edges[ei].u != v && edges[ei].v != v) continue;
        const ProbeStatus s = oracle.probe(static_cast<int>(ei), l);
        found = s == ProbeStatus::found;
        open = open || s == ProbeStatus::unknown;
      }
      if (!found && !open) {
        rep.verdict = Verdict::fails;
        rep.evidence.push_back(Witness{"missing-cycle", {v}, {}, std::nullopt, l});
        break;
      }
      unknown = unknown || (!found && open);
    }
  }
  if (rep.verdict != Verdict::fails) rep.verdict = combine(false, unknown);
  rep.stats = {oracle.nodes(), ms_since(start)};
  return rep;
}

CheckReport is_pancyclic(const Graph& g, long long node_limit) {
  require_order3(g);
  const auto start = Clock::now();
  CheckReport rep{"pancyclic"};
  CycleOracle oracle(g, node_limit);
  bool unknown = false;
  for (int l = 3; l <= g.order(); ++l) {
    bool found = false;
    bool open = false;
    for (std::size_t ei = 0; ei < oracle.edges().size() && !found; ++ei) {
      const ProbeStatus s = oracle.probe(static_cast<int>(ei), l);
      found = s == ProbeStatus::found;
      open = open || s == ProbeStatus::unknown;
    }
    if (!found && !open) {
      rep.verdict = Verdict::fails;
      rep.evidence.push_back(Witness{"missing-cycle", {}, {}, std::nullopt, l});
      break;
    }
    unknown = unknown || (!found && open);
  }
  if (rep.verdict != Verdict::fails) rep.verdict = combine(false, unknown);
  rep.stats = {oracle.nodes(), ms_since(start)};
  return rep;
}

CheckReport connectivity_report(const Graph& g, int k) {
  const auto start = Clock::now();
  CheckReport rep{"connectivity"};
  const int kappa = vertex_connectivity(g);
  rep.evidence.push_back(Witness{"connectivity", {}, {kappa}});
  if (kappa < g.order() - 1) rep.evidence.push_back(Witness{"vertex-cut", minimum_vertex_cut(g)});
  rep.verdict = kappa >= k ? Verdict::holds : Verdict::fails;
  rep.stats.elapsed_ms = ms_since(start);
  return rep;
}

CheckReport verify_h_block_properties(int k) {
  if (k < 3 || h_block_order(k) > kMaxOrder) throw GraphError("H(k) properties need 3 <= k <= 11");
  const auto start = Clock::now();
  const LabeledGraph hb = h_block(k);
  const Graph& h = hb.graph;
  const int n = h.order();
  const int m = 3 * k - 3;
  const int v = hb.vertex("v"), u = hb.vertex("u");
  auto vi = [&](int i) { return hb.vertex("v" + std::to_string(i)); };
  auto ui = [&](int i) { return hb.vertex("u" + std::to_string(i)); };
  const int v1 = vi(1), u1 = ui(1);
  long long nodes = 0;

  auto path_part = [&](CheckReport& part, int length, std::optional<Edge> through) {
    const ProbeResult r = find_path(h, PathQuery{v1, u1, length, through});
    nodes += r.nodes;
    if (r.status == ProbeStatus::found) {
      part.evidence.push_back(Witness{"path", r.vertices, {}, through, length});
    } else {
      part.verdict = Verdict::fails;
      part.evidence.push_back(Witness{"missing-path", {v1, u1}, {}, through, length});
    }
  };
  auto cycle_part = [&](CheckReport& part, Edge e, int lo, int hi) {
    for (int p = lo; p <= hi; ++p) {
      const ProbeResult r = find_cycle_through(h, e, p);
      nodes += r.nodes;
      if (r.status == ProbeStatus::found) {
        part.evidence.push_back(Witness{"cycle", r.vertices, {}, e, p});
      } else {
        part.verdict = Verdict::fails;
        part.evidence.push_back(missing_cycle(e, p));
      }
    }
  };

  std::vector<Edge> omega;
  for (int i = 1; i <= m; ++i) omega.emplace_back(v, vi(i));
  for (int i = 1; i < m; ++i) omega.emplace_back(vi(i), vi(i + 1));
  omega.emplace_back(v, u);
  omega.emplace_back(v, ui(m));

  CheckReport rep{"h-block-properties"};

  CheckReport p1{"(i) v1-u1 paths of every length in [3, 6k-5]"};
  for (int p = 3; p <= 6 * k - 5; ++p) path_part(p1, p, std::nullopt);

  CheckReport p2{"(ii) every Omega edge on a v1-u1 path of length 6k-5"};
  for (const Edge& e : omega) path_part(p2, 6 * k - 5, e);

  CheckReport p3{"(iii) v_i v_{i+1} pancyclic and on a v1-u1 path of length 3k-i+1"};
  for (int i = 1; i <= m - 1; ++i) {
    const Edge e(vi(i), vi(i + 1));
    cycle_part(p3, e, 3, n);
    path_part(p3, 3 * k - i + 1, e);
  }

  CheckReport p4{"(iv) v u_{3k-3} pancyclic and on a v1-u1 path of length 4"};
  cycle_part(p4, Edge(v, ui(m)), 3, n);
  path_part(p4, 4, Edge(v, ui(m)));

  CheckReport p5{"(v) vu on p-cycles for p in [3, 3k-1] and on a v1-u1 path of length 3"};
  cycle_part(p5, Edge(v, u), 3, 3 * k - 1);
  path_part(p5, 3, Edge(v, u));

  CheckReport p6{"(vi) v v_i on p-cycles for p in [3, 6k-i-3] and on a v1-u1 path of length 3k-i+1"};
  for (int i = 1; i <= m; ++i) {
    const Edge e(v, vi(i));
    cycle_part(p6, e, 3, 6 * k - i - 3);
    path_part(p6, 3 * k - i + 1, e);
  }

  for (CheckReport* p : {&p1, &p2, &p3, &p4, &p5, &p6}) {
    if (!p->holds()) rep.verdict = Verdict::fails;
    rep.parts.push_back(std::move(*p));
  }
  rep.stats = {nodes, ms_since(start)};
  return rep;
}

CheckReport verify_distance_layer_bounds(const Graph& g) {
  const auto start = Clock::now();
  CheckReport rep{"layer-bounds"};
  const int n = g.order();
  const int d = diameter(g);
  int x = 0;
  while (eccentricity(g, x) != d) ++x;
  const DistanceLayers dl = distance_layers(g, x);
  const std::vector<int> s = dl.sizes();
  rep.evidence.push_back(Witness{"layer-sizes", {x}, s});

  auto part = [](std::string name, bool applicable, bool ok) {
    CheckReport p{std::move(name)};
    p.applicable = applicable;
    p.verdict = (!applicable || ok) ? Verdict::holds : Verdict::fails;
    return p;
  };

  const int delta = min_degree(g);
  CheckReport deg = part("min-degree >= 3", n >= 4, delta >= 3);
  for (int w = 0; w < n; ++w) {
    if (g.degree(w) == delta) {
      deg.evidence.push_back(Witness{"degree", {w}, {delta}});
      break;
    }
  }
  CheckReport conn = part("2-connected", n >= 3, n >= 3 && is_k_connected(g, 2));
  if (n >= 3 && !conn.holds()) conn.evidence.push_back(Witness{"vertex-cut", minimum_vertex_cut(g)});

  CheckReport first = part("|V_1| >= 3", n >= 4 && d >= 1, d >= 1 && s[1] >= 3);
  CheckReport last = part("|V_{d-1}| + |V_d| >= 4", n >= 4 && d >= 2, d >= 2 && s[d - 1] + s[d] >= 4);
  CheckReport middle = part("|V_i| + |V_{i+1}| >= 5 for 1 <= i <= d-2", d >= 3, true);
  for (int i = 1; i + 2 <= d; ++i) {
    if (s[i] + s[i + 1] < 5) {
      middle.verdict = Verdict::fails;
      middle.evidence.push_back(Witness{"layer-pair", {}, {i, s[i], s[i + 1]}});
    }
  }
  for (CheckReport* p : {&deg, &conn, &first, &last, &middle}) {
    if (!p->holds()) rep.verdict = Verdict::fails;
    rep.parts.push_back(std::move(*p));
  }
  rep.stats.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace epc
