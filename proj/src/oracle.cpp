#include "tpl/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tpl/canonical.hpp"

namespace tpl::oracle {

Count count_cycles(const Graph& g, int k) {
  const int n = g.order();
  if (k < 3 || k > n) return 0;
  Count closed = 0;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i)
      if (pick[i]) vs.push_back(i);
    std::sort(vs.begin(), vs.end());
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.adjacent(vs[i], vs[(i + 1) % k]);
      if (ok) ++closed;
    } while (std::next_permutation(vs.begin(), vs.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return closed / (2 * static_cast<Count>(k));
}

Count count_paths4(const Graph& g, Vertex u, Vertex v) {
  Count total = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int p[5] = {u, a, b, c, v};
        bool distinct = true;
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j) distinct = distinct && p[i] != p[j];
        if (!distinct) continue;
        if (g.adjacent(u, a) && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, v)) ++total;
      }
  return total;
}

std::vector<bool> permutation_key(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    // perm[i] = vertex placed at position i
    std::vector<bool> key;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key.push_back(g.adjacent(perm[i], perm[j]));
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const int n = g.order();
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Drops vertices of degree <= 1 and suppresses degree-2 vertices; neither
// changes whether a K5 or K3,3 subdivision exists.
Graph reduce(Graph g) {
  for (;;) {
    bool changed = false;
    for (Vertex x = 0; x < g.order(); ++x) {
      const int d = g.degree(x);
      if (d <= 1) {
        g = g.without_vertex(x);
        changed = true;
        break;
      }
      if (d == 2) {
        Vertex a = lowest(g.neighbors(x));
        Vertex b = lowest(g.neighbors(x) & ~bit(a));
        Graph h = g.adjacent(a, b) ? g : g.with_edge(a, b);
        g = h.without_vertex(x);
        changed = true;
        break;
      }
    }
    if (!changed) return g;
  }
}

class KuratowskiSearch {
 public:
  KuratowskiSearch() : k5_(canonical_form(complete_graph(5))), k33_(canonical_form(complete_bipartite(3, 3))) {}

  bool contains(const Graph& raw) {
    const Graph g = reduce(raw);
    if (g.size() < 9) return false;
    const CanonicalForm key = canonical_form(g);
    if (key == k5_ || key == k33_) return true;
    if (!dead_.insert(key).second) return false;
    int deg3 = 0, deg4 = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      deg3 += g.degree(v) >= 3;
      deg4 += g.degree(v) >= 4;
    }
    if (deg3 < 6 && deg4 < 5) return false;
    for (auto [u, v] : g.edges())
      if (contains(g.without_edge(u, v))) return true;
    return false;
  }

 private:
  CanonicalForm k5_, k33_;
  std::set<CanonicalForm> dead_;
};

}  // namespace

bool has_kuratowski_subdivision(const Graph& g) { return KuratowskiSearch().contains(g); }

}  // namespace tpl::oracle
