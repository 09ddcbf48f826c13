#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tpl/blocks.hpp"

using namespace tpl;

namespace {

Graph bowtie() { return make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

Graph two_k4_sharing_vertex() {
  Graph g(7);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) g = g.with_edge(a, b).with_edge(a + 3, b + 3);
  return g;
}

// Triangle 0-1-2 with 3,4,5 inside, attached along the 6-cycle 0-3-1-4-2-5.
Graph octahedron() {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}, {3, 4}, {4, 5}, {5, 3}});
}

// K_{1,1,3}: every triangle uses the edge 0-1.
Graph book3() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}); }

std::vector<BlockLabel> labels(const std::vector<TriangularBlock>& blocks) {
  std::vector<BlockLabel> out;
  for (const auto& b : blocks) out.push_back(b.label);
  return out;
}

bool partitions_edges(const Graph& g, const std::vector<TriangularBlock>& blocks) {
  std::vector<Edge> all;
  for (const auto& b : blocks) all.insert(all.end(), b.edges.begin(), b.edges.end());
  std::sort(all.begin(), all.end());
  return all == g.edges();
}

}  // namespace

TEST_CASE("decompose_blocks on the named examples") {
  CHECK(labels(decompose_blocks(complete_graph(4))) == std::vector{BlockLabel::K4});
  CHECK(labels(decompose_blocks(two_k4_sharing_vertex())) == std::vector{BlockLabel::K4, BlockLabel::K4});
  auto c4 = decompose_blocks(cycle_graph(4));
  CHECK(labels(c4) == std::vector(4, BlockLabel::K2));
  CHECK(partitions_edges(cycle_graph(4), c4));
}

TEST_CASE("classify_block against the reference blocks") {
  CHECK(classify_block_graph(complete_graph(3)) == BlockLabel::K3);
  CHECK(classify_block_graph(complete_graph(4).without_edge(2, 3)) == BlockLabel::Theta4);
  CHECK(classify_block_graph(complete_graph(5).without_edge(1, 4)) == BlockLabel::K5minus);
  CHECK(classify_block_graph(complete_graph(5)) == BlockLabel::Other);
  CHECK(classify_block_graph(octahedron()) == BlockLabel::Other);
  // Edge and triangle counts of the pictured five-vertex blocks.
  CHECK(reference_block(BlockLabel::K5minus).size() == 9);
  CHECK(count_cycles(reference_block(BlockLabel::K5minus), 3) == 7);
  CHECK(reference_block(BlockLabel::B5a).size() == 8);
  CHECK(count_cycles(reference_block(BlockLabel::B5a), 3) == 4);
  CHECK(reference_block(BlockLabel::B5b).size() == 7);
  CHECK(count_cycles(reference_block(BlockLabel::B5b), 3) == 3);
  CHECK(reference_block(BlockLabel::B5c).size() == 8);
  CHECK(count_cycles(reference_block(BlockLabel::B5c), 3) == 5);
  CHECK_THROWS_AS(reference_block(BlockLabel::Other), BlockError);
  for (int i = 0; i < 8; ++i) {
    auto label = static_cast<BlockLabel>(i);
    CHECK(classify_block_graph(reference_block(label)) == label);
    CHECK(decompose_blocks(reference_block(label)).size() == 1);
  }
}

TEST_CASE("block_census satisfies the triangle identity") {
  BlockCensus tri = block_census(complete_graph(3));
  CHECK(tri.blocks.size() == 1);
  CHECK(tri.leftover_triangles == 0);
  CHECK(tri.total_triangles() == 1);

  BlockCensus bow = block_census(bowtie());
  CHECK(labels(bow.blocks) == std::vector{BlockLabel::K3, BlockLabel::K3});
  CHECK(bow.total_triangles() == 2);

  BlockCensus oct = block_census(octahedron());
  CHECK(oct.total_triangles() == 8);
  BlockCensus oct_faces = block_census(octahedron(), ClosureMode::Face);
  CHECK(oct_faces.total_triangles() == 8);
}

TEST_CASE("face closure leaves non-facial triangles over") {
  Graph g = book3();
  auto tri = decompose_blocks(g);
  CHECK(labels(tri) == std::vector{BlockLabel::Other});
  BlockCensus face = block_census(g, ClosureMode::Face);
  CHECK(face.blocks.size() == 3);
  CHECK(face.leftover_triangles == 1);
  CHECK(face.total_triangles() == 3);
  CHECK(partitions_edges(g, face.blocks));
  CHECK_FALSE(closure_modes_agree(g));
  CHECK(closure_modes_agree(complete_graph(4)));
}

TEST_CASE("face closure validates its embedding") {
  Embedding wrong;
  wrong.rotation = {{1, 2}, {0, 2}, {0, 1}};
  CHECK_THROWS_AS(decompose_blocks(complete_graph(4), wrong), BlockError);
  CHECK_THROWS_AS(decompose_blocks(complete_graph(5), ClosureMode::Face), NonPlanarError);
}

TEST_CASE("check_ratio_bound") {
  RatioCheck k4 = check_ratio_bound(complete_graph(4), RatioRegime::C5free);
  CHECK(k4.holds);
  CHECK(k4.ratio == Rational(2, 3));
  RatioCheck k5m = check_ratio_bound(complete_graph(5).without_edge(0, 1), RatioRegime::C6free);
  CHECK(k5m.holds);
  CHECK(k5m.ratio == Rational(7, 9));
  CHECK(check_ratio_bound(complete_graph(2), RatioRegime::C5free).ratio == Rational(0));
  CHECK_THROWS_AS(check_ratio_bound(cycle_graph(5), RatioRegime::C5free), RegimeViolated);
  CHECK_THROWS_AS(check_ratio_bound(complete_graph(5).without_edge(0, 1), RatioRegime::C5free), RegimeViolated);
  CHECK_THROWS_AS(check_ratio_bound(cycle_graph(6), RatioRegime::C6free), RegimeViolated);
}

TEST_CASE("partition and census laws on random planar graphs") {
  std::mt19937_64 rng(83);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Graph g = testing::random_graph(9, 0.35, rng);
    if (!is_planar(g)) continue;
    ++checked;
    for (ClosureMode mode : {ClosureMode::Triangle, ClosureMode::Face}) {
      BlockCensus c = block_census(g, mode);
      REQUIRE(partitions_edges(g, c.blocks));
      REQUIRE(c.total_triangles() == count_cycles(g, 3));
      for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        const auto& b = c.blocks[i];
        if (b.edges.size() == 1) REQUIRE(b.label == BlockLabel::K2);
        REQUIRE(c.per_block_c3[i] == count_cycles(block_graph(b), 3));
      }
      if (mode == ClosureMode::Triangle) REQUIRE(c.leftover_triangles == 0);
    }
  }
  CHECK(checked > 200);
}
