#include "epc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <istream>
#include <set>
#include <thread>

#include "epc/canon.hpp"
#include "epc/checks.hpp"
#include "epc/families.hpp"

namespace epc {

std::string to_string(Property p) {
  switch (p) {
    case Property::none: return "none";
    case Property::triangle_cover: return "triangle-cover";
    case Property::edge_pancyclic: return "edge-pancyclic";
  }
  return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
  for (Property p : {Property::none, Property::triangle_cover, Property::edge_pancyclic}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EPC_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int max_size(int n) { return n * (n - 1) / 2; }

// Leaf pipeline. Cheap conditions first; each stage counts its survivors.
class LeafFilter {
 public:
  LeafFilter(const GraphFilter& f, long long node_limit) : f_(f), node_limit_(node_limit) {
    names_ = {"generated", "min-degree", "connectivity"};
    if (f.predicate != Property::none) names_.push_back("triangle-cover");
    if (f.predicate == Property::edge_pancyclic) names_.push_back("edge-pancyclic");
  }

  const std::vector<std::string>& names() const { return names_; }

  // Stage counters are indexed like names(); returns true if g passes.
  bool operator()(const Graph& g, std::vector<long long>& stages, long long& unknown) const {
    ++stages[0];
    if (min_degree(g) < f_.min_degree) return false;
    ++stages[1];
    if (f_.connectivity > 0 && !is_k_connected(g, f_.connectivity)) return false;
    ++stages[2];
    if (f_.predicate == Property::none) return true;
    if (!has_triangle_cover(g).holds()) return false;
    ++stages[3];
    if (f_.predicate == Property::triangle_cover) return true;
    if (g.size() == 0) return false;
    const CheckReport r = is_edge_pancyclic(g, node_limit_);
    if (r.verdict == Verdict::unknown) ++unknown;
    if (!r.holds()) return false;
    ++stages[4];
    return true;
  }

 private:
  GraphFilter f_;
  long long node_limit_;
  std::vector<std::string> names_;
};

// Per-worker tallies, summed after the pool joins.
struct Tally {
  std::vector<Graph> found;
  std::vector<long long> levels;
  std::vector<long long> stages;
  long long canon_calls = 0;
  long long unknown = 0;

  void absorb(Tally&& t) {
    found.insert(found.end(), std::make_move_iterator(t.found.begin()), std::make_move_iterator(t.found.end()));
    if (levels.size() < t.levels.size()) levels.resize(t.levels.size());
    for (std::size_t i = 0; i < t.levels.size(); ++i) levels[i] += t.levels[i];
    if (stages.size() < t.stages.size()) stages.resize(t.stages.size());
    for (std::size_t i = 0; i < t.stages.size(); ++i) stages[i] += t.stages[i];
    canon_calls += t.canon_calls;
    unknown += t.unknown;
  }
};

// Canonical augmentation by edges. Nodes are canonical graphs; a child P+e
// survives iff e and the child's canonical last edge e* (the maximum of the
// (max deg, min deg) endpoint invariant, ties broken by canonical position)
// agree up to isomorphism, i.e. canon(C - e*) == P. Every graph then has a
// single parent class, so merging isomorphic siblings removes all repeats.
class Augmenter {
 public:
  Augmenter(int n, const GraphFilter& f, long long node_limit)
      : n_(n),
        m_lo_(f.size_lo),
        m_hi_(f.size_hi < 0 ? max_size(n) : std::min(f.size_hi, max_size(n))),
        need_degree_(f.min_degree),
        need_connected_(f.connectivity > 0),
        leaf_(f, node_limit) {}

  const LeafFilter& leaf() const { return leaf_; }
  int m_hi() const { return m_hi_; }

  // Whether this node or anything reachable by adding edges can still meet
  // the degree and connectivity demands within m_hi edges. Adding one edge
  // lowers the degree deficit by at most 2 and merges at most 2 components.
  bool viable(const Graph& g) const {
    const int spare = m_hi_ - g.size();
    if (spare < 0) return false;
    if (need_degree_ > 0) {
      int deficit = 0;
      for (int v = 0; v < n_; ++v) deficit += std::max(0, need_degree_ - g.degree(v));
      if (deficit > 2 * spare) return false;
    }
    if (need_connected_ && component_count(g) - 1 > spare) return false;
    return true;
  }

  void visit(const Graph& g, Tally& t) const {
    const int e = g.size();
    if (static_cast<int>(t.levels.size()) <= e) t.levels.resize(e + 1);
    ++t.levels[e];
    if (t.stages.empty()) t.stages.assign(leaf_.names().size(), 0);
    if (e >= m_lo_ && e <= m_hi_ && leaf_(g, t.stages, t.unknown)) t.found.push_back(g);
  }

  std::vector<Graph> children(const Graph& p, Tally& t) const {
    std::vector<Graph> out;
    if (p.size() >= m_hi_) return out;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        if (p.adjacent(i, j)) continue;
        const Edge added(i, j);
        const Graph c = with_edge(p, added);
        if (!viable(c)) continue;

        int key_max = 0, ties = 0;
        for (const Edge& f : c.edges()) {
          const int k = key(c, f);
          if (k > key_max) {
            key_max = k;
            ties = 1;
          } else if (k == key_max) {
            ++ties;
          }
        }
        if (key(c, added) < key_max) continue;

        CanonicalForm cf = canonical_form(c);
        ++t.canon_calls;
        if (ties > 1) {
          std::array<int, kMaxOrder> pos{};
          for (int v = 0; v < n_; ++v) pos[cf.labeling[v]] = v;
          Edge last = added;
          int last_rank = -1;
          for (const Edge& f : c.edges()) {
            if (key(c, f) != key_max) continue;
            const int a = pos[f.u], b = pos[f.v];
            const int rank = std::max(a, b) * kMaxOrder + std::min(a, b);
            if (rank > last_rank) {
              last_rank = rank;
              last = f;
            }
          }
          if (last != added) {
            ++t.canon_calls;
            if (canonical_graph(without_edge(c, last)) != p) continue;
          }
        }
        if (std::find(out.begin(), out.end(), cf.graph) == out.end()) out.push_back(std::move(cf.graph));
      }
    }
    return out;
  }

  void descend(const Graph& g, Tally& t) const {
    visit(g, t);
    for (const Graph& c : children(g, t)) descend(c, t);
  }

 private:
  static int key(const Graph& g, Edge e) {
    const int a = g.degree(e.u), b = g.degree(e.v);
    return std::max(a, b) * kMaxOrder + std::min(a, b);
  }

  int n_;
  int m_lo_;
  int m_hi_;
  int need_degree_;
  bool need_connected_;
  LeafFilter leaf_;
};

std::vector<StageCount> stage_list(const LeafFilter& leaf, const std::vector<long long>& counts) {
  std::vector<StageCount> out;
  for (std::size_t i = 0; i < leaf.names().size(); ++i) {
    out.push_back({leaf.names()[i], i < counts.size() ? counts[i] : 0});
  }
  return out;
}

void sort_canonical(std::vector<Graph>& graphs) {
  std::vector<std::pair<CanonicalCode, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (Graph& g : graphs) keyed.emplace_back(canonical_code(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [code, g] : keyed) graphs.push_back(std::move(g));
}

// Work units are the frontier of a breadth-first expansion deep enough to
// give every worker several subtrees.
constexpr std::size_t kUnitsPerWorker = 16;

}  // namespace

Enumeration enumerate_graphs(int n, const GraphFilter& filter, const SearchOptions& options) {
  if (n < 1 || n > kMaxGeneratorOrder) {
    throw GraphError("built-in enumeration supports orders 1.." + std::to_string(kMaxGeneratorOrder) +
                     ", got " + std::to_string(n));
  }
  const auto t0 = Clock::now();
  const Augmenter aug(n, filter, options.node_limit);
  const int workers = resolve_workers(options.workers);

  Tally total;
  std::vector<Graph> frontier;
  const Graph root(n);
  if (aug.viable(root)) frontier.push_back(root);
  const std::size_t target = kUnitsPerWorker * static_cast<std::size_t>(workers);
  while (!frontier.empty() && frontier.size() < target && frontier.front().size() < aug.m_hi()) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      aug.visit(g, total);
      for (Graph& c : aug.children(g, total)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }

  std::vector<Tally> tallies(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < frontier.size();) aug.descend(frontier[i], tallies[i]);
  };
  std::vector<std::thread> pool;
  const int spawned = std::min<int>(workers, static_cast<int>(frontier.size()));
  for (int w = 1; w < spawned; ++w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  for (Tally& t : tallies) total.absorb(std::move(t));

  Enumeration out;
  out.graphs = std::move(total.found);
  sort_canonical(out.graphs);
  out.stats.nodes_per_level = std::move(total.levels);
  out.stats.canon_calls = total.canon_calls;
  out.stats.stages = stage_list(aug.leaf(), total.stages);
  out.stats.unknown = total.unknown;
  out.stats.workers = workers;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

Enumeration filter_graph6_stream(std::istream& in, int n, const GraphFilter& filter, const SearchOptions& options) {
  if (n < 1 || n > kMaxGraph6Order) throw GraphError("stream order must be 1..62");
  const auto t0 = Clock::now();
  const LeafFilter leaf(filter, options.node_limit);
  const int lo = filter.size_lo;
  const int hi = filter.size_hi < 0 ? max_size(n) : filter.size_hi;

  std::vector<long long> stages(leaf.names().size(), 0);
  long long unknown = 0, read = 0;
  std::set<CanonicalCode> seen;
  std::vector<Graph> found;
  std::string line;
  for (long long line_no = 1; std::getline(in, line); ++line_no) {
    if (line.empty() || line == "\r") continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.detail(), e.offset());
    }
    ++read;
    if (g.order() != n || g.size() < lo || g.size() > hi) continue;
    if (!seen.insert(canonical_code(g)).second) continue;
    if (leaf(g, stages, unknown)) found.push_back(canonical_graph(g));
  }
  sort_canonical(found);

  Enumeration out;
  out.graphs = std::move(found);
  out.stats.nodes_per_level = {read};
  out.stats.canon_calls = read;
  out.stats.stages = stage_list(leaf, stages);
  out.stats.unknown = unknown;
  out.stats.workers = 1;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

namespace {

std::vector<std::string> graph6_list(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  for (const Graph& g : graphs) out.push_back(emit_graph6(g));
  return out;
}

long long classes(const EnumerationStats& s) {
  long long total = 0;
  for (long long c : s.nodes_per_level) total += c;
  return total;
}

void add_stages(std::vector<StageCount>& into, const std::vector<StageCount>& from) {
  if (into.empty()) {
    into = from;
    return;
  }
  for (std::size_t i = 0; i < into.size() && i < from.size(); ++i) into[i].count += from[i].count;
}

// Ascend sizes until the filter first admits a graph. Each size is its own
// exhaustive run, so every size below the reported minimum is covered.
SearchOutcome ascend(const std::string& objective, int n, GraphFilter filter, const SearchOptions& options) {
  const auto t0 = Clock::now();
  SearchOutcome out;
  out.objective = objective;
  out.exhaustive = true;
  for (int m = 0; m <= max_size(n); ++m) {
    filter.size_lo = filter.size_hi = m;
    const Enumeration e = enumerate_graphs(n, filter, options);
    out.sizes_searched.push_back(m);
    out.enumerated += classes(e.stats);
    add_stages(out.stages, e.stats.stages);
    if (e.stats.unknown > 0) {
      out.exhaustive = false;
      out.budget_exhausted = true;
    }
    if (!e.graphs.empty()) {
      out.value = m;
      out.passing = static_cast<long long>(e.graphs.size());
      out.census[m] = out.passing;
      out.witnesses = graph6_list(e.graphs);
      break;
    }
  }
  if (!out.exhaustive) out.value.reset();
  out.elapsed_ms = ms_since(t0);
  return out;
}

int edge_pancyclic_degree(int n) { return n >= 4 ? 3 : 2; }

}  // namespace

SearchOutcome min_size_edge_pancyclic(int n, const SearchOptions& options) {
  if (n < 3 || n > kMaxGeneratorOrder) throw GraphError("min-size edge-pancyclic search needs 3 <= n <= 12");
  GraphFilter f;
  f.min_degree = edge_pancyclic_degree(n);
  f.connectivity = 2;
  f.predicate = Property::edge_pancyclic;
  SearchOutcome out = ascend("min-size", n, f, options);
  out.space = "all graphs of order " + std::to_string(n) + " and size <= " +
              std::to_string(out.sizes_searched.back()) + " with min degree >= " + std::to_string(f.min_degree) +
              " and 2-connected";
  return out;
}

SearchOutcome min_size_edge_pancyclic_stream(std::istream& in, int n, const SearchOptions& options) {
  const auto t0 = Clock::now();
  GraphFilter f;
  f.min_degree = edge_pancyclic_degree(n);
  f.connectivity = 2;
  f.predicate = Property::edge_pancyclic;
  const Enumeration e = filter_graph6_stream(in, n, f, options);

  SearchOutcome out;
  out.objective = "min-size";
  out.enumerated = e.stats.nodes_per_level.empty() ? 0 : e.stats.nodes_per_level[0];
  out.stages = e.stats.stages;
  out.budget_exhausted = e.stats.unknown > 0;
  out.exhaustive = !out.budget_exhausted;
  for (const Graph& g : e.graphs) ++out.census[g.size()];
  if (out.exhaustive && !e.graphs.empty()) {
    out.value = out.census.begin()->first;
    out.passing = out.census.begin()->second;
    for (const Graph& g : e.graphs) {
      if (g.size() == *out.value) out.witnesses.push_back(emit_graph6(g));
    }
  }
  out.space = "graph6 stream of " + std::to_string(out.enumerated) + " graphs";
  out.elapsed_ms = ms_since(t0);
  return out;
}

SearchOutcome min_size_triangle_cover(int n, int kappa, const SearchOptions& options) {
  if (kappa < 1 || kappa > 3) throw GraphError("kappa must be 1, 2 or 3");
  if (n < kappa + 1 || n > kMaxGeneratorOrder) throw GraphError("order out of range for kappa");
  GraphFilter f;
  f.min_degree = std::max(kappa, n >= 3 ? 2 : 1);
  f.connectivity = kappa;
  f.predicate = Property::triangle_cover;
  SearchOutcome out = ascend("min-size", n, f, options);
  out.space = "all graphs of order " + std::to_string(n) + " and size <= " +
              std::to_string(out.sizes_searched.back()) + " with connectivity >= " + std::to_string(kappa);
  return out;
}

SearchOutcome max_diameter_edge_pancyclic(int n, bool exhaustive, const SearchOptions& options) {
  const auto t0 = Clock::now();
  SearchOutcome out;
  out.objective = "max-diameter";
  if (exhaustive || n == 8 || n == 9) {
    if (n < 3 || n > 9) throw GraphError("exhaustive max-diameter search needs 3 <= n <= 9");
    GraphFilter f;
    f.min_degree = edge_pancyclic_degree(n);
    f.connectivity = 2;
    f.predicate = Property::edge_pancyclic;
    const Enumeration e = enumerate_graphs(n, f, options);
    out.enumerated = classes(e.stats);
    out.stages = e.stats.stages;
    out.budget_exhausted = e.stats.unknown > 0;
    out.exhaustive = exhaustive && !out.budget_exhausted;
    std::vector<Graph> best;
    int best_d = -1;
    for (const Graph& g : e.graphs) {
      const int d = diameter(g);
      ++out.census[d];
      if (d > best_d) {
        best_d = d;
        best.clear();
      }
      if (d == best_d) best.push_back(g);
    }
    out.passing = static_cast<long long>(e.graphs.size());
    if (best_d >= 0) out.value = best_d;
    if (!exhaustive) best.resize(std::min<std::size_t>(best.size(), 1));
    out.witnesses = graph6_list(best);
    out.space = "all edge-pancyclic graphs of order " + std::to_string(n);
    if (!exhaustive) out.space = "witness taken from an exhaustive census at order " + std::to_string(n);
  } else {
    Graph w;
    if (n == 3) {
      w = cycle(3);
    } else if (n >= 4 && n <= 7) {
      w = wheel(n).graph;
    } else if (n >= 10 && n <= kMaxOrder) {
      w = q_graph(n);
    } else {
      throw GraphError("no constructed max-diameter witness for order " + std::to_string(n));
    }
    const CheckReport r = is_edge_pancyclic(w, options.node_limit);
    out.enumerated = 1;
    out.stages = {{"constructed", 1}, {"edge-pancyclic", r.holds() ? 1 : 0}};
    out.budget_exhausted = r.verdict == Verdict::unknown;
    if (r.holds()) {
      const Graph c = canonical_graph(w);
      out.value = diameter(c);
      out.census[*out.value] = 1;
      out.passing = 1;
      out.witnesses = {emit_graph6(c)};
    }
    out.exhaustive = false;
    out.space = "constructed witness of order " + std::to_string(n);
  }
  out.elapsed_ms = ms_since(t0);
  return out;
}

std::vector<Graph> extremal_census(int n, Property predicate, int kappa, std::optional<int> size,
                                   const SearchOptions& options) {
  GraphFilter f;
  f.connectivity = kappa;
  f.predicate = predicate;
  // Only degree bounds that follow directly from the definitions: kappa >= k
  // forces degree >= k; with no isolated vertex a covered edge forces degree
  // >= 2, and a vertex on a Hamilton cycle has degree >= 2.
  f.min_degree = kappa;
  if (n >= 3 && predicate != Property::none && (kappa >= 1 || predicate == Property::edge_pancyclic)) {
    f.min_degree = std::max(f.min_degree, 2);
  }
  if (size) f.size_lo = f.size_hi = *size;
  return enumerate_graphs(n, f, options).graphs;
}

}  // namespace epc
