#include <doctest.h>

#include "epc/canon.hpp"
#include "epc/checks.hpp"
#include "epc/families.hpp"

using namespace epc;

TEST_CASE("basic graphs") {
  CHECK(cycle(5).size() == 5);
  CHECK(complete(4).size() == 6);
  CHECK(empty(2).size() == 0);
  CHECK(path(1).size() == 0);
  CHECK_THROWS_AS(cycle(2), GraphError);
}

TEST_CASE("joins") {
  CHECK(are_isomorphic(join(complete(1), cycle(4)), wheel(5).graph));
  CHECK(wheel(5).graph.size() == 8);
  CHECK(join(complete(1), path(6)).size() == 11);
  CHECK(are_isomorphic(join(empty(2), empty(2)), cycle(4)));
  CHECK(are_isomorphic(join(cycle(4), path(3)), join(path(3), cycle(4))));
  CHECK_THROWS_AS(join(complete(40), complete(30)), GraphError);

  const Graph q = sequential_join(std::vector<Graph>{complete(1), cycle(3), empty(2), cycle(3), complete(1)});
  CHECK(q.order() == 10);
  CHECK(q.size() == 24);
  CHECK(diameter(q) == 4);
  CHECK(sequential_join(std::vector<Graph>{cycle(5)}) == cycle(5));
  CHECK(are_isomorphic(sequential_join(std::vector<Graph>{complete(1), complete(1), complete(1)}), path(3)));
}

TEST_CASE("wheel and fan sizes") {
  for (int n = 4; n <= 20; ++n) CHECK(wheel(n).graph.size() == 2 * n - 2);
  for (int s = 2; s <= 20; ++s) CHECK(fan(s).graph.size() == 2 * s - 3);
  CHECK(wheel(7).labels.front() == "hub");
}

TEST_CASE("A_n and the odd families") {
  for (int n = 8; n <= 30; n += 2) {
    const LabeledGraph a = a_graph(n);
    CHECK(a.graph.size() == 3 * n / 2);
    CHECK(has_triangle_cover(a.graph).holds());
    CHECK(is_k_connected(a.graph, 2));
  }
  const LabeledGraph a10 = a_graph(10);
  int deg4 = 0, deg2 = 0;
  for (int v = 0; v < 10; ++v) (a10.graph.degree(v) == 4 ? deg4 : deg2) += 1;
  CHECK(deg4 == 5);
  CHECK(deg2 == 5);
  CHECK(a10.graph.adjacent(a10.vertex("u1"), a10.vertex("v1")));
  CHECK(a10.graph.adjacent(a10.vertex("u1"), a10.vertex("v2")));

  for (int n = 9; n <= 31; n += 2) {
    for (OddKind k : {OddKind::F, OddKind::G, OddKind::H}) {
      const Graph g = odd_extremal(k, n).graph;
      CHECK(g.order() == n);
      CHECK(g.size() == (3 * n + 1) / 2);
      CHECK(has_triangle_cover(g).holds());
      CHECK(is_k_connected(g, 2));
    }
  }
  const LabeledGraph h9 = odd_extremal(OddKind::H, 9);
  CHECK_FALSE(h9.graph.adjacent(h9.vertex("v1"), h9.vertex("v2")));
  CHECK(h9.graph.adjacent(h9.vertex("z"), h9.vertex("u1")));

  const Graph f9 = odd_extremal(OddKind::F, 9).graph, g9 = odd_extremal(OddKind::G, 9).graph,
              hh9 = odd_extremal(OddKind::H, 9).graph;
  CHECK(canonical_code(f9) != canonical_code(g9));
  CHECK(canonical_code(f9) != canonical_code(hh9));
  CHECK(canonical_code(g9) != canonical_code(hh9));

  CHECK_THROWS_AS(a_graph(9), GraphError);
  CHECK_THROWS_AS(a_graph(6), GraphError);
  CHECK_THROWS_AS(odd_extremal(OddKind::F, 10), GraphError);
  CHECK_THROWS_AS(odd_extremal(OddKind::G, 7), GraphError);
}

TEST_CASE("H(k) and G(k)") {
  for (int k = 3; k <= 11; ++k) {
    const LabeledGraph h = h_block(k);
    CHECK(h.graph.order() == h_block_order(k));
    CHECK(h.graph.size() == h_block_size(k));
    CHECK(h.graph.adjacent(h.vertex("v"), h.vertex("u")));
    CHECK(h.graph.adjacent(h.vertex("v"), h.vertex("u" + std::to_string(3 * k - 3))));
    CHECK(h.graph.adjacent(h.vertex("u"), h.vertex("v" + std::to_string(3 * k - 3))));
  }
  CHECK(h_block(3).graph.order() == 14);
  CHECK(h_block(3).graph.size() == 25);
  CHECK(h_block(4).graph.size() == 37);
  CHECK_THROWS_AS(h_block(2), GraphError);
  CHECK_THROWS_AS(h_block(12), GraphError);

  const LabeledGraph ring = g_ring(3);
  CHECK(ring.graph.order() == 39);
  CHECK(ring.graph.size() == 75);
  CHECK(min_degree(ring.graph) == 3);
  CHECK(is_k_connected(ring.graph, 2));
  CHECK_THROWS_AS(g_ring(4), GraphError);

  // order and size formulas, symbolically for larger k
  for (long long k = 3; k <= 50; ++k) {
    CHECK(g_ring_order(k) == k * h_block_order(k) - k);  // each x_i sits in two blocks
    CHECK(g_ring_size(k) == k * h_block_size(k));
    CHECK(g_ring_size(k) == 2 * g_ring_order(k) - k);
  }
}

TEST_CASE("Q_n") {
  CHECK(q_graph_parts(10).size() == 5);
  CHECK(q_graph_parts(13).size() == 6);
  CHECK(q_graph_parts(12).front().order() == 2);
  CHECK(q_graph_parts(12).back().order() == 2);
  for (int n = 10; n <= 64; ++n) {
    const Graph q = q_graph(n);
    CHECK(q.order() == n);
    CHECK(diameter(q) == 2 * n / 5);
  }
  CHECK_THROWS_AS(q_graph(9), GraphError);
}

TEST_CASE("family specs") {
  CHECK(family_from_name("g_ring") == Family::g_ring);
  CHECK_FALSE(family_from_name("petersen").has_value());
  CHECK(family_name(Family::A) == "A");
  CHECK(construct({Family::wheel, 6, {}}).graph == wheel(6).graph);
  CHECK(construct({Family::seq_join, 0, {"K1", "C3", "E2", "C3", "K1"}}).graph == q_graph(10));
  CHECK_THROWS_AS(construct({Family::seq_join, 0, {"X3"}}), GraphError);
  CHECK_THROWS_AS(construct({Family::seq_join, 0, {"K3x"}}), GraphError);
}
