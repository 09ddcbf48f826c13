#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tpl {

using Vertex = int;
using VertexMask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Calls f(v) for each set bit of m in increasing order.
template <typename F>
inline void for_each_bit(VertexMask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64, stored as adjacency
/// bit rows. Values are immutable; every "modifier" returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws GraphError on out-of-range endpoints or loops. Duplicates collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// rows[v] must be a valid symmetric loop-free adjacency; checked.
  static Graph from_rows(std::span<const VertexMask> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexMask vertices() const { return low_mask(n_); }
  VertexMask neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return popcount(rows_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::span<const VertexMask> rows() const { return rows_; }

  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending
  int min_degree() const;
  bool is_connected() const;
  std::vector<VertexMask> components() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  /// Appends vertex n adjacent to nbrs (a subset of the current vertices).
  Graph with_vertex(VertexMask nbrs) const;
  Graph without_vertex(Vertex v) const;
  /// perm[old] = new label.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> rows_;
};

Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// Vertices of s relabeled 0..|s|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask s);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& a, const Graph& b);

std::string to_string(const Graph& g);  // "n=4 e=4: 0-1 1-2 ..."

}  // namespace tpl
