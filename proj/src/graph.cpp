#include "tpl/graph.hpp"

#include <algorithm>
#include <sstream>

namespace tpl {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) throw GraphError("vertex count out of range: " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
  }
  int twice = 0;
  for (auto r : g.rows_) twice += popcount(r);
  g.m_ = twice / 2;
  return g;
}

Graph Graph::from_rows(std::span<const VertexMask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexMask all = g.vertices();
  int twice = 0;
  for (int v = 0; v < g.n_; ++v) {
    VertexMask r = rows[v];
    if (r & ~all) throw GraphError("adjacency row references missing vertex");
    if (r & bit(v)) throw GraphError("loop at vertex " + std::to_string(v));
    g.rows_[v] = r;
    twice += popcount(r);
  }
  for (int v = 0; v < g.n_; ++v)
    for_each_bit(g.rows_[v], [&](Vertex u) {
      if (!g.adjacent(u, v)) throw GraphError("adjacency rows are not symmetric");
    });
  g.m_ = twice / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for_each_bit(rows_[u] & ~low_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<VertexMask> Graph::components() const {
  std::vector<VertexMask> out;
  VertexMask left = vertices();
  while (left) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](Vertex v) { next |= rows_[v]; });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw GraphError("invalid edge");
  Graph g = *this;
  if (!adjacent(u, v)) {
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  if (u >= 0 && v >= 0 && u < n_ && v < n_ && adjacent(u, v)) {
    g.rows_[u] &= ~bit(v);
    g.rows_[v] &= ~bit(u);
    --g.m_;
  }
  return g;
}

Graph Graph::with_vertex(VertexMask nbrs) const {
  if (n_ >= kMaxOrder) throw GraphError("graph already has the maximum order");
  if (nbrs & ~vertices()) throw GraphError("new vertex adjacent to missing vertex");
  Graph g = *this;
  const Vertex v = n_;
  g.rows_.push_back(nbrs);
  ++g.n_;
  for_each_bit(nbrs, [&](Vertex u) { g.rows_[u] |= bit(v); });
  g.m_ += popcount(nbrs);
  return g;
}

Graph Graph::without_vertex(Vertex v) const { return induced_subgraph(*this, vertices() & ~bit(v)); }

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  Graph g(n_);
  g.m_ = m_;
  for (int u = 0; u < n_; ++u) {
    VertexMask r = 0;
    for_each_bit(rows_[u], [&](Vertex v) { r |= bit(perm[v]); });
    g.rows_[perm[u]] = r;
  }
  return g;
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph induced_subgraph(const Graph& g, VertexMask s) {
  s &= g.vertices();
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for_each_bit(s, [&](Vertex v) { index[v] = k++; });
  std::vector<VertexMask> rows(static_cast<std::size_t>(k), 0);
  for_each_bit(s, [&](Vertex v) {
    VertexMask r = 0;
    for_each_bit(g.neighbors(v) & s, [&](Vertex u) { r |= bit(index[u]); });
    rows[index[v]] = r;
  });
  return Graph::from_rows(rows);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexMask m = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw GraphError("induced_subgraph: vertex out of range");
    m |= bit(v);
  }
  return induced_subgraph(g, m);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), e);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " e=" << g.size() << ":";
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  return os.str();
}

}  // namespace tpl
