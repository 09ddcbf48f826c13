#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "tpl/canonical.hpp"
#include "tpl/counting.hpp"

using namespace tpl;

TEST_CASE("cycle counts on named graphs") {
  CHECK(count_cycles(complete_bipartite(2, 6), 4) == 15);
  CHECK(count_cycles(cycle_graph(5), 5) == 1);
  CHECK(count_cycles(complete_graph(4), 3) == 4);
  CHECK(count_cycles(complete_graph(4), 4) == 3);
  CHECK(count_cycles(complete_graph(5), 5) == 12);
  CHECK(count_cycles(complete_graph(8), 8) == 2520);
  CHECK_THROWS_AS(count_cycles(cycle_graph(5), 2), CountError);
  CHECK_THROWS_AS(count_cycles(cycle_graph(5), 9), CountError);
}

TEST_CASE("cycles through a vertex") {
  for (Vertex v = 0; v < 6; ++v) CHECK(count_cycles_through(cycle_graph(6), v, 6) == 1);
  Graph pendant = cycle_graph(6).with_vertex(bit(0));
  for (int k = 3; k <= 8; ++k) CHECK(count_cycles_through(pendant, 6, k) == 0);
  CHECK_THROWS_AS(count_cycles_through(pendant, 7, 4), CountError);
  CHECK_THROWS_AS(count_cycles_through(pendant, 0, 10), CountError);
}

TEST_CASE("K4 counts") {
  CHECK(count_k4(complete_graph(4)) == 1);
  CHECK(count_k4(complete_graph(5)) == 5);
  CHECK(count_k4(complete_bipartite(3, 3)) == 0);
}

TEST_CASE("paths of length four") {
  Graph c5 = cycle_graph(5);
  CHECK(count_paths4(c5, 0, 1) == 1);
  CHECK(count_paths4(complete_bipartite(2, 4), 0, 1) == 0);
  CHECK_THROWS_AS(count_paths4(c5, 2, 2), CountError);
  CHECK(triple_path_total(complete_bipartite(2, 4), 0, 1, 2) == 0);
  Graph c6 = cycle_graph(6);
  CHECK(triple_path_total(c6, 0, 2, 4) == oracle::count_paths4(c6, 0, 2) + oracle::count_paths4(c6, 2, 4) +
                                              oracle::count_paths4(c6, 0, 4));
  CHECK(triple_path_total(c6, 0, 2, 4) == 3);
  CHECK_THROWS_AS(triple_path_total(c6, 0, 2, 0), CountError);
}

TEST_CASE("pattern freeness") {
  Graph k2m = complete_bipartite(2, 7);
  CHECK(is_f_free(k2m, Pattern::C3));
  CHECK(is_f_free(k2m, Pattern::C5));
  CHECK_FALSE(is_f_free(k2m, Pattern::C4));
  CHECK_FALSE(is_f_free(complete_graph(4), Pattern::C3));
  CHECK_FALSE(is_f_free(cycle_graph(6), Pattern::C6));
  CHECK(is_f_free(complete_graph(4), Pattern::C5));
  CHECK_FALSE(is_f_free(complete_graph(4), Pattern::K4));
  CHECK(parse_pattern("C6") == Pattern::C6);
  CHECK(pattern_name(Pattern::K4) == "k4");
  CHECK_THROWS_AS(parse_pattern("c9"), CountError);
}

TEST_CASE("edge_creates matches recounting") {
  std::mt19937_64 rng(61);
  const Pattern all[] = {Pattern::C3, Pattern::C4, Pattern::C5, Pattern::C6, Pattern::K4};
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = testing::random_graph(9, 0.25, rng);
    for (Pattern f : all) {
      if (!is_f_free(g, f)) continue;
      for (Vertex u = 0; u < 9; ++u)
        for (Vertex v = u + 1; v < 9; ++v) {
          if (g.adjacent(u, v)) continue;
          REQUIRE(edge_creates(g, u, v, f) == !is_f_free(g.with_edge(u, v), f));
        }
    }
  }
}

TEST_CASE("handshake and monotonicity on random graphs") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(8, 0.45, rng);
    for (int k = 3; k <= 6; ++k) {
      Count through = 0;
      for (Vertex v = 0; v < 8; ++v) through += count_cycles_through(g, v, k);
      REQUIRE(through == static_cast<Count>(k) * count_cycles(g, k));
    }
    Vertex u = static_cast<Vertex>(rng() % 8), v = static_cast<Vertex>((u + 1 + rng() % 7) % 8);
    Graph h = g.with_edge(u, v);
    for (int k = 3; k <= 8; ++k) REQUIRE(count_cycles(h, k) >= count_cycles(g, k));
    REQUIRE(count_k4(h) >= count_k4(g));
    REQUIRE(count_paths4(h, 0, 7) >= count_paths4(g, 0, 7));
  }
}

TEST_CASE("odd cycles vanish on K_{2,m}") {
  for (int m = 1; m <= 10; ++m)
    for (int k = 3; k <= 7; k += 2) CHECK(count_cycles(complete_bipartite(2, m), k) == 0);
}

TEST_CASE("fast counters agree with the exponential oracle on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalForm> done;
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      if (!done.insert(canonical_form(g)).second) return;
      for (int k = 3; k <= n; ++k) REQUIRE(count_cycles(g, k) == oracle::count_cycles(g, k));
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) REQUIRE(count_paths4(g, u, v) == oracle::count_paths4(g, u, v));
    });
  }
}

TEST_CASE("dense graphs match the oracle for long cycles") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_graph(8, 0.6, rng);
    for (int k = 3; k <= 8; ++k) REQUIRE(count_cycles(g, k) == oracle::count_cycles(g, k));
  }
}
