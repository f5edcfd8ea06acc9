#include "epc/families.hpp"

#include <algorithm>
#include <numeric>

namespace epc {

int LabeledGraph::vertex(const std::string& name) const {
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw GraphError("no vertex named " + name);
  return static_cast<int>(it - labels.begin());
}

Graph basic(BasicKind kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case BasicKind::cycle:
      if (n < 3) throw GraphError("cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case BasicKind::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case BasicKind::complete:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
    case BasicKind::empty:
      break;
  }
  return build_graph(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const Graph parts[] = {g, h};
  return sequential_join(parts);
}

Graph sequential_join(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("sequential join of no parts");
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > kMaxOrder) throw GraphError("joined order " + std::to_string(total) + " exceeds 64");

  std::vector<Edge> edges;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Edge& e : parts[i].edges()) edges.emplace_back(e.u + offset, e.v + offset);
    if (i + 1 < parts.size()) {
      const int next = offset + parts[i].order();
      for (int a = 0; a < parts[i].order(); ++a) {
        for (int b = 0; b < parts[i + 1].order(); ++b) edges.emplace_back(offset + a, next + b);
      }
    }
    offset += parts[i].order();
  }
  return build_graph(total, edges);
}

LabeledGraph wheel(int n) {
  if (n < 4) throw GraphError("wheel needs n >= 4");
  LabeledGraph out{join(complete(1), cycle(n - 1)), {"hub"}};
  for (int i = 1; i < n; ++i) out.labels.push_back("r" + std::to_string(i));
  return out;
}

LabeledGraph fan(int s) {
  if (s < 2) throw GraphError("fan needs s >= 2");
  LabeledGraph out{join(complete(1), path(s - 1)), {"c"}};
  for (int i = 1; i < s; ++i) out.labels.push_back("p" + std::to_string(i));
  return out;
}

namespace {

// A_n without the size/parity guard, shared with the odd families.
LabeledGraph a_graph_unchecked(int n) {
  const int q = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    const int next = (i + 1) % q;
    edges.emplace_back(i, next);      // v_i v_{i+1}
    edges.emplace_back(q + i, i);     // u_i v_i
    edges.emplace_back(q + i, next);  // u_i v_{i+1}
  }
  LabeledGraph out{build_graph(n, edges), {}};
  for (int i = 1; i <= q; ++i) out.labels.push_back("v" + std::to_string(i));
  for (int i = 1; i <= q; ++i) out.labels.push_back("u" + std::to_string(i));
  return out;
}

}  // namespace

LabeledGraph a_graph(int n) {
  if (n < 8 || n % 2 != 0) throw GraphError("A_n needs even n >= 8");
  return a_graph_unchecked(n);
}

LabeledGraph odd_extremal(OddKind kind, int n) {
  if (n < 9 || n % 2 == 0) throw GraphError("F_n, G_n, H_n need odd n >= 9");
  const LabeledGraph base = a_graph_unchecked(n - 1);
  const int q = (n - 1) / 2;
  const int v1 = 0, v2 = 1, u1 = q, added = n - 1;
  std::vector<Edge> edges = base.graph.edges();
  std::string name;
  switch (kind) {
    case OddKind::F:
      edges.insert(edges.end(), {Edge(added, v1), Edge(added, v2)});
      name = "x";
      break;
    case OddKind::G:
      edges.insert(edges.end(), {Edge(added, u1), Edge(added, v1)});
      name = "y";
      break;
    case OddKind::H:
      std::erase(edges, Edge(v1, v2));
      edges.insert(edges.end(), {Edge(added, v1), Edge(added, v2), Edge(added, u1)});
      name = "z";
      break;
  }
  LabeledGraph out{build_graph(n, edges), base.labels};
  out.labels.push_back(name);
  return out;
}

LabeledGraph h_block(int k) {
  if (k < 3) throw GraphError("H(k) needs k >= 3");
  if (h_block_order(k) > kMaxOrder) throw GraphError("H(k) order exceeds 64");
  const int m = 3 * k - 3;  // path length of each fan
  const int v = 0, u = m + 1;
  auto vi = [&](int i) { return i; };
  auto ui = [&](int i) { return u + i; };
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    edges.emplace_back(v, vi(i));
    edges.emplace_back(u, ui(i));
    if (i < m) {
      edges.emplace_back(vi(i), vi(i + 1));
      edges.emplace_back(ui(i), ui(i + 1));
    }
  }
  edges.insert(edges.end(), {Edge(v, u), Edge(v, ui(m)), Edge(u, vi(m))});
  LabeledGraph out{build_graph(static_cast<int>(h_block_order(k)), edges), {"v"}};
  for (int i = 1; i <= m; ++i) out.labels.push_back("v" + std::to_string(i));
  out.labels.push_back("u");
  for (int i = 1; i <= m; ++i) out.labels.push_back("u" + std::to_string(i));
  return out;
}

LabeledGraph g_ring(int k) {
  if (k < 3 || g_ring_order(k) > kMaxOrder) {
    throw GraphError("G(k) is supported for k = 3 only (order 6k^2-5k must not exceed 64)");
  }
  const LabeledGraph block = h_block(k);
  const int block_order = block.graph.order();
  const int v1 = block.vertex("v1");
  const int u1 = block.vertex("u1");
  const int n = static_cast<int>(g_ring_order(k));

  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (int i = 0; i < k; ++i) labels[i] = "x" + std::to_string(i + 1);
  int next = k;
  for (int c = 0; c < k; ++c) {
    std::vector<int> map(block_order);
    for (int b = 0; b < block_order; ++b) {
      if (b == v1) {
        map[b] = c;
      } else if (b == u1) {
        map[b] = (c + 1) % k;
      } else {
        map[b] = next;
        labels[next] = "c" + std::to_string(c + 1) + "." + block.labels[b];
        ++next;
      }
    }
    for (const Edge& e : block.graph.edges()) edges.emplace_back(map[e.u], map[e.v]);
  }
  return {build_graph(n, edges), std::move(labels)};
}

std::vector<Graph> q_graph_parts(int n) {
  if (n < 10 || n > kMaxOrder) throw GraphError("Q_n needs 10 <= n <= 64");
  const int k = n / 5;
  const int r = n % 5;
  const Graph k1 = complete(1), k2 = complete(2), c3 = cycle(3), e2 = empty(2);

  // Alternating C_3 / empty-K_2 core: G_2 .. G_{2k} with C_3 at even positions.
  std::vector<Graph> parts;
  parts.push_back(r == 2 ? k2 : k1);
  for (int j = 1; j <= k; ++j) {
    parts.push_back(c3);
    if (j < k) parts.push_back(e2);
  }
  switch (r) {
    case 0: parts.push_back(k1); break;
    case 1: parts.push_back(k2); break;
    case 2: parts.push_back(k2); break;
    case 3:
      parts.push_back(c3);
      parts.push_back(k1);
      break;
    case 4:
      parts.push_back(c3);
      parts.push_back(k2);
      break;
  }
  return parts;
}

Graph q_graph(int n) { return sequential_join(q_graph_parts(n)); }

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::cycle, "cycle"},     {Family::path, "path"},       {Family::complete, "complete"},
    {Family::empty, "empty"},     {Family::wheel, "wheel"},     {Family::fan, "fan"},
    {Family::A, "A"},             {Family::F, "F"},             {Family::G, "G"},
    {Family::H, "H"},             {Family::h_block, "h_block"}, {Family::g_ring, "g_ring"},
    {Family::q_graph, "q_graph"}, {Family::seq_join, "seq_join"},
};

Graph part_from_token(const std::string& token) {
  if (token.size() < 2) throw GraphError("bad join part '" + token + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(token.substr(1), &used);
    if (used + 1 != token.size()) throw GraphError("bad join part '" + token + "'");
  } catch (const std::logic_error&) {
    throw GraphError("bad join part '" + token + "'");
  }
  switch (token[0]) {
    case 'K': return complete(n);
    case 'C': return cycle(n);
    case 'P': return path(n);
    case 'E': return empty(n);
    default: throw GraphError("bad join part '" + token + "'");
  }
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, s] : kFamilyNames) {
    if (s == name) return f;
  }
  return std::nullopt;
}

std::string family_name(Family f) {
  for (const auto& [g, s] : kFamilyNames) {
    if (g == f) return std::string(s);
  }
  return "?";
}

LabeledGraph construct(const FamilySpec& spec) {
  const int p = spec.param;
  switch (spec.family) {
    case Family::cycle: return {cycle(p), {}};
    case Family::path: return {path(p), {}};
    case Family::complete: return {complete(p), {}};
    case Family::empty: return {empty(p), {}};
    case Family::wheel: return wheel(p);
    case Family::fan: return fan(p);
    case Family::A: return a_graph(p);
    case Family::F: return odd_extremal(OddKind::F, p);
    case Family::G: return odd_extremal(OddKind::G, p);
    case Family::H: return odd_extremal(OddKind::H, p);
    case Family::h_block: return h_block(p);
    case Family::g_ring: return g_ring(p);
    case Family::q_graph: return {q_graph(p), {}};
    case Family::seq_join: {
      std::vector<Graph> parts;
      for (const std::string& t : spec.parts) parts.push_back(part_from_token(t));
      return {sequential_join(parts), {}};
    }
  }
  throw GraphError("unknown family");
}

}  // namespace epc
