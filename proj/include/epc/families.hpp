#ifndef EPC_FAMILIES_HPP
#define EPC_FAMILIES_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epc/graph.hpp"

namespace epc {

/// A constructed graph plus the conventional vertex names (v1, u1, x, hub...).
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// Index of the vertex carrying `name`; throws GraphError if absent.
  int vertex(const std::string& name) const;
};

enum class BasicKind { cycle, path, complete, empty };

/// C_n (n >= 3) on 0-1-...-(n-1)-0, P_n on 0-1-...-(n-1), K_n, and the
/// edgeless graph.
Graph basic(BasicKind kind, int n);
inline Graph cycle(int n) { return basic(BasicKind::cycle, n); }
inline Graph path(int n) { return basic(BasicKind::path, n); }
inline Graph complete(int n) { return basic(BasicKind::complete, n); }
inline Graph empty(int n) { return basic(BasicKind::empty, n); }

/// g's vertices keep their indices, h's are shifted by |g|.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union of the parts (in order, indices shifted) with every vertex
/// of part i joined to every vertex of part i+1.
Graph sequential_join(std::span<const Graph> parts);

/// W_n = K_1 v C_{n-1}; the hub is vertex 0, the rim is 1..n-1 in cyclic order.
LabeledGraph wheel(int n);

/// Fan K_1 v P_{s-1}; center 0, path 1..s-1. (Not the odd extremal F_n.)
LabeledGraph fan(int s);

/// A_n for even n >= 8: cycle v1..vq (indices 0..q-1, q = n/2) and u_i at
/// index q+i-1 adjacent to v_i and v_{i+1}.
LabeledGraph a_graph(int n);

enum class OddKind { F, G, H };

/// F_n, G_n, H_n for odd n >= 9, built from A_{n-1} with the added vertex
/// (x, y or z) at index n-1.
LabeledGraph odd_extremal(OddKind kind, int n);

/// H(k), k >= 3: two fans F_{3k-2} with centers v (index 0) and u (index
/// 3k-2), paths v1..v_{3k-3} (1..3k-3) and u1..u_{3k-3} (3k-1..6k-5), plus
/// the edges vu, v u_{3k-3} and u v_{3k-3}.
LabeledGraph h_block(int k);

/// G(k): a k-cycle x1..xk whose every edge x_i x_{i+1} is replaced by a copy
/// of H(k) with v1 = x_i and u1 = x_{i+1}. x_i is vertex i-1; copy i then
/// contributes its 6k-6 remaining vertices in H(k) index order. Only k = 3
/// fits under the 64-vertex cap.
LabeledGraph g_ring(int k);

constexpr long long g_ring_order(long long k) { return 6 * k * k - 5 * k; }
constexpr long long g_ring_size(long long k) { return 2 * g_ring_order(k) - k; }
constexpr long long h_block_order(long long k) { return 6 * k - 4; }
constexpr long long h_block_size(long long k) { return 12 * k - 11; }

/// Blocks of the sequential join defining Q_n (n >= 10), selected by n mod 5.
std::vector<Graph> q_graph_parts(int n);
/// Q_n, of order n and diameter floor(2n/5).
Graph q_graph(int n);

enum class Family { cycle, path, complete, empty, wheel, fan, A, F, G, H, h_block, g_ring, q_graph, seq_join };

/// A family tag plus its integer parameter (n, or k for h_block / g_ring).
/// seq_join instead takes `parts`, tokens such as "K1", "C3", "E2", "P4".
struct FamilySpec {
  Family family = Family::cycle;
  int param = 0;
  std::vector<std::string> parts;
};

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);

/// Builds the graph a spec names; labels are empty for families without
/// conventional vertex names.
LabeledGraph construct(const FamilySpec& spec);

}  // namespace epc

#endif  // EPC_FAMILIES_HPP
