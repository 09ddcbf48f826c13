#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tpl/graph.hpp"
#include "tpl/oracle.hpp"

namespace tpl::testing {

// Every labeled graph on n vertices, edge bits in (i<j) row-major order.
template <typename F>
void for_each_labeled_graph(int n, F&& f) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1U) {
        rows[pairs[b].first] |= bit(pairs[b].second);
        rows[pairs[b].second] |= bit(pairs[b].first);
      }
    f(Graph::from_rows(rows));
  }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// One representative per isomorphism class, via the permutation oracle.
inline std::set<std::vector<bool>> oracle_classes(int n, bool (*keep)(const Graph&)) {
  std::set<std::vector<bool>> out;
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (keep(g)) out.insert(oracle::permutation_key(g));
  });
  return out;
}

}  // namespace tpl::testing
