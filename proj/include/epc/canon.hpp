#ifndef EPC_CANON_HPP
#define EPC_CANON_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "epc/graph.hpp"

namespace epc {

/// Upper-triangle bits (graph6 column order) of the canonically relabeled
/// graph, packed eight to a byte, most significant bit first. Two graphs have
/// equal codes exactly when they are isomorphic.
struct CanonicalCode {
  int order = 0;
  std::vector<std::uint8_t> bits;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  Graph graph;
  /// labeling[i] is the input vertex placed at canonical position i.
  std::array<std::uint8_t, kMaxOrder> labeling{};
};

/// Canonical relabeling by equitable refinement plus individualization,
/// taking the lexicographically smallest adjacency matrix over the search
/// tree. Automorphisms found along the way prune equivalent subtrees.
CanonicalForm canonical_form(const Graph& g);

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).graph; }

CanonicalCode canonical_code(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace epc

#endif  // EPC_CANON_HPP
