#include "tpl/blocks.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "tpl/canonical.hpp"

namespace tpl {

namespace {

class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : edges_(g.edges()), id_(static_cast<std::size_t>(g.order() * g.order()), -1), n_(g.order()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      id_[u * n_ + v] = id_[v * n_ + u] = static_cast<int>(i);
    }
  }
  int operator()(Vertex u, Vertex v) const { return id_[u * n_ + v]; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<int> id_;
  int n_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

std::vector<TriangularBlock> collect(const EdgeIndex& idx, UnionFind& uf) {
  const auto& edges = idx.edges();
  std::vector<int> slot(edges.size(), -1);
  std::vector<TriangularBlock> out;
  // Edges are sorted, so each root appears first at its smallest edge.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int r = uf.find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    TriangularBlock& b = out[slot[r]];
    b.edges.push_back(edges[i]);
    b.vertices |= bit(edges[i].first) | bit(edges[i].second);
  }
  for (TriangularBlock& b : out) b.label = classify_block(b);
  return out;
}

template <typename F>
void for_each_triangle(const Graph& g, F&& f) {
  for (Vertex a = 0; a < g.order(); ++a) {
    const VertexMask up = g.neighbors(a) & ~low_mask(a + 1);
    for_each_bit(up, [&](Vertex b) {
      for_each_bit(up & g.neighbors(b) & ~low_mask(b + 1), [&](Vertex c) { f(a, b, c); });
    });
  }
}

Count census_leftover(const Graph& g, const std::vector<TriangularBlock>& blocks) {
  std::vector<int> owner(static_cast<std::size_t>(g.order() * g.order()), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto [u, v] : blocks[i].edges) owner[u * g.order() + v] = static_cast<int>(i);
  auto own = [&](Vertex u, Vertex v) { return owner[std::min(u, v) * g.order() + std::max(u, v)]; };
  Count leftover = 0;
  for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    const int o = own(a, b);
    if (own(b, c) != o || own(a, c) != o) ++leftover;
  });
  return leftover;
}

BlockCensus census_of(const Graph& g, std::vector<TriangularBlock> blocks) {
  BlockCensus out;
  out.leftover_triangles = census_leftover(g, blocks);
  for (const TriangularBlock& b : blocks) out.per_block_c3.push_back(count_cycles(block_graph(b), 3));
  out.blocks = std::move(blocks);
  return out;
}

struct References {
  std::array<Graph, 8> graphs;
  std::array<CanonicalForm, 8> forms;

  References() {
    graphs[0] = complete_graph(2);
    graphs[1] = complete_graph(3);
    graphs[2] = complete_graph(4).without_edge(0, 1);
    graphs[3] = complete_graph(4);
    graphs[4] = complete_graph(5).without_edge(0, 1);
    // Wheel: hub 4 over the rim 0-1-2-3.
    graphs[5] = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    // Fan: apex 4 over the path 0-1-2-3.
    graphs[6] = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    // K4 on 0..3 with an ear 4 on the edge 0-1.
    graphs[7] = complete_graph(4).with_vertex(bit(0) | bit(1));
    for (std::size_t i = 0; i < graphs.size(); ++i) forms[i] = canonical_form(graphs[i]);
  }
};

const References& references() {
  static const References refs;
  return refs;
}

}  // namespace

std::string_view block_label_name(BlockLabel label) {
  switch (label) {
    case BlockLabel::K2: return "K2";
    case BlockLabel::K3: return "K3";
    case BlockLabel::Theta4: return "Theta4";
    case BlockLabel::K4: return "K4";
    case BlockLabel::K5minus: return "K5minus";
    case BlockLabel::B5a: return "B5a";
    case BlockLabel::B5b: return "B5b";
    case BlockLabel::B5c: return "B5c";
    case BlockLabel::Other: return "Other";
  }
  return "Other";
}

Count BlockCensus::total_triangles() const {
  return std::accumulate(per_block_c3.begin(), per_block_c3.end(), leftover_triangles);
}

std::vector<TriangularBlock> decompose_blocks(const Graph& g) {
  EdgeIndex idx(g);
  UnionFind uf(idx.edges().size());
  for_each_triangle(g, [&](Vertex a, Vertex b, Vertex c) {
    uf.unite(idx(a, b), idx(b, c));
    uf.unite(idx(a, b), idx(a, c));
  });
  return collect(idx, uf);
}

std::vector<TriangularBlock> decompose_blocks(const Graph& g, const Embedding& e) {
  if (!is_plane_embedding(g, e)) throw BlockError("embedding does not match the graph");
  EdgeIndex idx(g);
  UnionFind uf(idx.edges().size());
  for (const Face& f : faces(e)) {
    if (f.length != 3) continue;
    const Vertex a = f.walk[0], b = f.walk[1], c = f.walk[2];
    uf.unite(idx(a, b), idx(b, c));
    uf.unite(idx(a, b), idx(a, c));
  }
  return collect(idx, uf);
}

std::vector<TriangularBlock> decompose_blocks(const Graph& g, ClosureMode mode) {
  return mode == ClosureMode::Triangle ? decompose_blocks(g) : decompose_blocks(g, embed_components(g));
}

Graph block_graph(const TriangularBlock& b) {
  std::array<Vertex, kMaxOrder> index{};
  int k = 0;
  for_each_bit(b.vertices, [&](Vertex v) { index[v] = k++; });
  std::vector<Edge> edges;
  edges.reserve(b.edges.size());
  for (auto [u, v] : b.edges) edges.emplace_back(index[u], index[v]);
  return Graph::from_edges(k, edges);
}

BlockLabel classify_block_graph(const Graph& h) {
  if (h.order() > 5) return BlockLabel::Other;
  const CanonicalForm form = canonical_form(h);
  const References& refs = references();
  for (std::size_t i = 0; i < refs.forms.size(); ++i)
    if (refs.forms[i] == form) return static_cast<BlockLabel>(i);
  return BlockLabel::Other;
}

BlockLabel classify_block(const TriangularBlock& b) { return classify_block_graph(block_graph(b)); }

const Graph& reference_block(BlockLabel label) {
  if (label == BlockLabel::Other) throw BlockError("Other has no reference graph");
  return references().graphs[static_cast<std::size_t>(label)];
}

BlockCensus block_census(const Graph& g) { return census_of(g, decompose_blocks(g)); }
BlockCensus block_census(const Graph& g, const Embedding& e) { return census_of(g, decompose_blocks(g, e)); }
BlockCensus block_census(const Graph& g, ClosureMode mode) { return census_of(g, decompose_blocks(g, mode)); }

bool closure_modes_agree(const Graph& g) {
  auto a = decompose_blocks(g);
  auto b = decompose_blocks(g, ClosureMode::Face);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].edges != b[i].edges) return false;
  return true;
}

RatioCheck check_ratio_bound(const Graph& g, RatioRegime regime) {
  const bool c5 = regime == RatioRegime::C5free;
  if (!is_f_free(g, c5 ? Pattern::C5 : Pattern::C6))
    throw RegimeViolated(c5 ? "graph contains a 5-cycle" : "graph contains a 6-cycle");
  RatioCheck out;
  out.triangles = count_cycles(g, 3);
  out.edges = g.size();
  out.bound = c5 ? Rational(2, 3) : Rational(7, 9);
  if (out.edges > 0) out.ratio = Rational(static_cast<std::int64_t>(out.triangles), out.edges);
  out.holds = out.ratio <= out.bound;
  return out;
}

}  // namespace tpl
