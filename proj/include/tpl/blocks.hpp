#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "tpl/counting.hpp"
#include "tpl/graph.hpp"
#include "tpl/planarity.hpp"

namespace tpl {

using Rational = boost::rational<std::int64_t>;

enum class BlockLabel { K2, K3, Theta4, K4, K5minus, B5a, B5b, B5c, Other };

std::string_view block_label_name(BlockLabel label);

// Triangle closure merges along any triangle; face closure only along the
// 3-faces of a fixed embedding.
enum class ClosureMode { Triangle, Face };

struct TriangularBlock {
  std::vector<Edge> edges;  // sorted, u < v
  VertexMask vertices = 0;
  BlockLabel label = BlockLabel::Other;
};

struct BlockCensus {
  std::vector<TriangularBlock> blocks;
  std::vector<Count> per_block_c3;
  Count leftover_triangles = 0;

  Count total_triangles() const;
};

class BlockError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RegimeViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Blocks are ordered by their smallest edge.
std::vector<TriangularBlock> decompose_blocks(const Graph& g);
std::vector<TriangularBlock> decompose_blocks(const Graph& g, const Embedding& e);
/// Face mode embeds each component itself; throws NonPlanarError.
std::vector<TriangularBlock> decompose_blocks(const Graph& g, ClosureMode mode);

/// The graph spanned by the block's edges, vertices relabeled in order.
Graph block_graph(const TriangularBlock& b);
BlockLabel classify_block(const TriangularBlock& b);
BlockLabel classify_block_graph(const Graph& h);
const Graph& reference_block(BlockLabel label);

BlockCensus block_census(const Graph& g);
BlockCensus block_census(const Graph& g, const Embedding& e);
BlockCensus block_census(const Graph& g, ClosureMode mode);

/// True when both modes give the same edge partition.
bool closure_modes_agree(const Graph& g);

enum class RatioRegime { C5free, C6free };

struct RatioCheck {
  bool holds = true;
  Rational ratio{0};  // triangles per edge, 0 for an edgeless graph
  Rational bound{0};
  Count triangles = 0;
  int edges = 0;
};

/// Throws RegimeViolated if g contains the regime's forbidden cycle.
RatioCheck check_ratio_bound(const Graph& g, RatioRegime regime);

}  // namespace tpl
