#include "tpl/counting.hpp"

namespace tpl {

namespace {

void check_length(int k) {
  if (k < kMinCycle || k > kMaxCycle) throw CountError("cycle length must be in 3..8, got " + std::to_string(k));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw CountError("vertex out of range: " + std::to_string(v));
}

// Extends the path ending at `last` (with `depth` vertices so far) inside
// `allowed`. When one vertex is missing, closes onto `anchor` with the second
// path vertex smaller than the closing vertex.
struct CycleWalker {
  std::span<const VertexMask> adj;
  int k;
  Vertex second;
  VertexMask anchor_nbrs;

  Count walk(Vertex last, int depth, VertexMask allowed) const {
    if (depth == k - 1) {
      VertexMask close = adj[last] & anchor_nbrs & allowed & ~low_mask(second + 1);
      return static_cast<Count>(popcount(close));
    }
    Count total = 0;
    for_each_bit(adj[last] & allowed, [&](Vertex x) { total += walk(x, depth + 1, allowed & ~bit(x)); });
    return total;
  }

  bool exists(Vertex last, int depth, VertexMask allowed) const {
    if (depth == k - 1) return (adj[last] & anchor_nbrs & allowed & ~low_mask(second + 1)) != 0;
    VertexMask next = adj[last] & allowed;
    while (next) {
      Vertex x = lowest(next);
      next &= next - 1;
      if (exists(x, depth + 1, allowed & ~bit(x))) return true;
    }
    return false;
  }
};

// Cycles through `anchor`, allowed vertices restricted to `pool`.
template <bool kStopEarly>
Count cycles_at(const Graph& g, Vertex anchor, int k, VertexMask pool) {
  const auto adj = g.rows();
  Count total = 0;
  VertexMask firsts = adj[anchor] & pool;
  while (firsts) {
    Vertex s = lowest(firsts);
    firsts &= firsts - 1;
    CycleWalker w{adj, k, s, adj[anchor]};
    VertexMask allowed = pool & ~bit(s);
    if constexpr (kStopEarly) {
      if (w.exists(s, 2, allowed)) return 1;
    } else {
      total += w.walk(s, 2, allowed);
    }
  }
  return total;
}

}  // namespace

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::C3: return "c3";
    case Pattern::C4: return "c4";
    case Pattern::C5: return "c5";
    case Pattern::C6: return "c6";
    case Pattern::K4: return "k4";
  }
  return "?";
}

Pattern parse_pattern(std::string_view name) {
  for (Pattern p : {Pattern::C3, Pattern::C4, Pattern::C5, Pattern::C6, Pattern::K4}) {
    std::string_view n = pattern_name(p);
    if (name.size() == n.size() && (name[0] | 0x20) == n[0] && name[1] == n[1]) return p;
  }
  throw CountError("unknown pattern: " + std::string(name));
}

Count count_cycles(const Graph& g, int k) {
  check_length(k);
  Count total = 0;
  for (Vertex s = 0; s < g.order(); ++s) total += cycles_at<false>(g, s, k, g.vertices() & ~low_mask(s + 1));
  return total;
}

bool has_cycle(const Graph& g, int k) {
  check_length(k);
  for (Vertex s = 0; s < g.order(); ++s)
    if (cycles_at<true>(g, s, k, g.vertices() & ~low_mask(s + 1))) return true;
  return false;
}

Count count_cycles_through(const Graph& g, Vertex v, int k) {
  check_length(k);
  check_vertex(g, v);
  return cycles_at<false>(g, v, k, g.vertices() & ~bit(v));
}

bool has_cycle_through(const Graph& g, Vertex v, int k) {
  check_length(k);
  check_vertex(g, v);
  return cycles_at<true>(g, v, k, g.vertices() & ~bit(v)) != 0;
}

Count count_k4(const Graph& g) {
  Count total = 0;
  for (Vertex a = 0; a < g.order(); ++a) {
    VertexMask na = g.neighbors(a) & ~low_mask(a + 1);
    for_each_bit(na, [&](Vertex b) {
      VertexMask nab = na & g.neighbors(b) & ~low_mask(b + 1);
      for_each_bit(nab, [&](Vertex c) { total += popcount(nab & g.neighbors(c) & ~low_mask(c + 1)); });
    });
  }
  return total;
}

Count count_paths4(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw CountError("count_paths4 needs distinct endpoints");
  Count total = 0;
  const VertexMask nv = g.neighbors(v);
  for_each_bit(g.neighbors(u) & ~bit(v), [&](Vertex a) {
    for_each_bit(g.neighbors(a) & ~(bit(u) | bit(v)), [&](Vertex b) {
      total += popcount(g.neighbors(b) & nv & ~(bit(u) | bit(a)));
    });
  });
  return total;
}

Count triple_path_total(const Graph& g, Vertex u1, Vertex u2, Vertex u3) {
  if (u1 == u2 || u2 == u3 || u1 == u3) throw CountError("triple_path_total needs three distinct vertices");
  return count_paths4(g, u1, u2) + count_paths4(g, u2, u3) + count_paths4(g, u1, u3);
}

bool is_f_free(const Graph& g, Pattern f) {
  switch (f) {
    case Pattern::C3: return !has_cycle(g, 3);
    case Pattern::C4: return !has_cycle(g, 4);
    case Pattern::C5: return !has_cycle(g, 5);
    case Pattern::C6: return !has_cycle(g, 6);
    case Pattern::K4: return count_k4(g) == 0;
  }
  return true;
}

namespace {

// Is there a u-v path with exactly `len` edges avoiding `banned`?
bool path_of_length(std::span<const VertexMask> adj, Vertex at, Vertex target, int len, VertexMask banned) {
  if (len == 1) return (adj[at] >> target) & 1U;
  VertexMask next = adj[at] & ~banned & ~bit(target);
  while (next) {
    Vertex x = lowest(next);
    next &= next - 1;
    if (path_of_length(adj, x, target, len - 1, banned | bit(x))) return true;
  }
  return false;
}

}  // namespace

bool edge_creates(const Graph& g, Vertex u, Vertex v, Pattern f) {
  const auto adj = g.rows();
  switch (f) {
    case Pattern::C3: return (adj[u] & adj[v]) != 0;
    case Pattern::C4: return path_of_length(adj, u, v, 3, bit(u));
    case Pattern::C5: return path_of_length(adj, u, v, 4, bit(u));
    case Pattern::C6: return path_of_length(adj, u, v, 5, bit(u));
    case Pattern::K4: {
      VertexMask common = adj[u] & adj[v];
      bool found = false;
      for_each_bit(common, [&](Vertex x) {
        if (adj[x] & common) found = true;
      });
      return found;
    }
  }
  return false;
}

}  // namespace tpl
