#include "tpl/planarity.hpp"

#include <algorithm>
#include <array>

namespace tpl {

namespace {

struct Block {
  VertexMask vertices = 0;
  std::array<VertexMask, kMaxOrder> adj{};
  int edges = 0;
};

// Tarjan's biconnected components over the edges of g.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g) : g_(g) {
    disc_.fill(-1);
    for (Vertex v = 0; v < g.order(); ++v)
      if (disc_[v] < 0 && g.degree(v) > 0) visit(v, -1);
  }
  std::vector<Block> take() { return std::move(blocks_); }

 private:
  void visit(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = time_++;
    for_each_bit(g_.neighbors(v), [&](Vertex w) {
      if (w == parent) return;
      if (disc_[w] < 0) {
        stack_.emplace_back(v, w);
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          Block b;
          for (;;) {
            auto [x, y] = stack_.back();
            stack_.pop_back();
            b.adj[x] |= bit(y);
            b.adj[y] |= bit(x);
            b.vertices |= bit(x) | bit(y);
            ++b.edges;
            if (x == v && y == w) break;
          }
          blocks_.push_back(b);
        }
      } else if (disc_[w] < disc_[v]) {
        stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    });
  }

  const Graph& g_;
  std::array<int, kMaxOrder> disc_{};
  std::array<int, kMaxOrder> low_{};
  int time_ = 0;
  std::vector<Edge> stack_;
  std::vector<Block> blocks_;
};

struct FaceCycle {
  std::vector<Vertex> walk;
  VertexMask mask = 0;
};

FaceCycle make_face(std::vector<Vertex> walk) {
  FaceCycle f;
  for (Vertex v : walk) f.mask |= bit(v);
  f.walk = std::move(walk);
  return f;
}

// Shortest path from `from` to `to` inside `allowed`, skipping the direct edge.
std::vector<Vertex> bfs_path(const Block& b, Vertex from, Vertex to, VertexMask allowed, bool skip_direct) {
  std::array<Vertex, kMaxOrder> prev;
  prev.fill(-1);
  VertexMask seen = bit(from);
  std::vector<Vertex> queue{from};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex x = queue[qi];
    VertexMask next = b.adj[x] & allowed & ~seen;
    if (skip_direct && x == from) next &= ~bit(to);
    bool done = false;
    for_each_bit(next, [&](Vertex y) {
      if (done) return;
      prev[y] = x;
      seen |= bit(y);
      if (y == to) {
        done = true;
        return;
      }
      queue.push_back(y);
    });
    if (done) break;
  }
  std::vector<Vertex> path;
  if (!(seen & bit(to))) return path;
  for (Vertex v = to; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Demoucron-Malgrange-Pertuiset on one biconnected block with >= 3 vertices.
// On success fills `out` with consistently oriented facial cycles.
bool embed_block(const Block& b, std::vector<FaceCycle>* out) {
  const int nv = popcount(b.vertices);
  if (b.edges > 3 * nv - 6) return false;
  const Vertex s = lowest(b.vertices);
  const Vertex t = lowest(b.adj[s]);
  std::vector<Vertex> cycle = bfs_path(b, t, s, b.vertices, true);
  std::vector<FaceCycle> faces;
  faces.push_back(make_face(cycle));
  std::reverse(cycle.begin(), cycle.end());
  faces.push_back(make_face(cycle));

  VertexMask placed = 0;
  std::array<VertexMask, kMaxOrder> placed_adj{};
  int placed_edges = 0;
  auto add_path = [&](const std::vector<Vertex>& p, bool closed) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      placed |= bit(p[i]);
      const bool has_next = i + 1 < p.size() || closed;
      if (!has_next) continue;
      Vertex x = p[i], y = p[(i + 1) % p.size()];
      placed_adj[x] |= bit(y);
      placed_adj[y] |= bit(x);
      ++placed_edges;
    }
  };
  add_path(faces[0].walk, true);

  struct Fragment {
    VertexMask inner = 0;     // empty for a chord
    VertexMask attach = 0;
    Vertex chord_u = -1, chord_v = -1;
  };
  std::vector<Fragment> frags;
  while (placed_edges < b.edges) {
    frags.clear();
    VertexMask rest = b.vertices & ~placed;
    while (rest) {
      Fragment f;
      VertexMask comp = bit(lowest(rest)), frontier = comp;
      while (frontier) {
        VertexMask next = 0;
        for_each_bit(frontier, [&](Vertex v) { next |= b.adj[v]; });
        f.attach |= next & placed;
        next &= rest & ~comp;
        comp |= next;
        frontier = next;
      }
      f.inner = comp;
      rest &= ~comp;
      frags.push_back(f);
    }
    for_each_bit(placed, [&](Vertex u) {
      for_each_bit(b.adj[u] & placed & ~placed_adj[u] & ~low_mask(u + 1), [&](Vertex v) {
        Fragment f;
        f.attach = bit(u) | bit(v);
        f.chord_u = u;
        f.chord_v = v;
        frags.push_back(f);
      });
    });

    int chosen = -1, chosen_face = -1;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      int count = 0, first = -1;
      for (std::size_t j = 0; j < faces.size(); ++j)
        if ((frags[i].attach & ~faces[j].mask) == 0) {
          if (count++ == 0) first = static_cast<int>(j);
        }
      if (count == 0) return false;
      if (count == 1) {
        chosen = static_cast<int>(i);
        chosen_face = first;
        break;
      }
      if (chosen < 0) {
        chosen = static_cast<int>(i);
        chosen_face = first;
      }
    }

    const Fragment& f = frags[chosen];
    std::vector<Vertex> path;
    if (f.inner == 0) {
      path = {f.chord_u, f.chord_v};
    } else {
      const Vertex a = lowest(f.attach);
      // Search from a through the fragment to any other attachment vertex.
      VertexMask targets = f.attach & ~bit(a);
      std::array<Vertex, kMaxOrder> prev;
      prev.fill(-1);
      VertexMask seen = bit(a);
      std::vector<Vertex> queue;
      for_each_bit(b.adj[a] & f.inner, [&](Vertex y) {
        prev[y] = a;
        seen |= bit(y);
        queue.push_back(y);
      });
      Vertex end = -1, last = -1;
      for (std::size_t qi = 0; qi < queue.size() && end < 0; ++qi) {
        Vertex x = queue[qi];
        if (b.adj[x] & targets) {
          end = lowest(b.adj[x] & targets);
          last = x;
          break;
        }
        for_each_bit(b.adj[x] & f.inner & ~seen, [&](Vertex y) {
          prev[y] = x;
          seen |= bit(y);
          queue.push_back(y);
        });
      }
      if (end < 0) return false;  // not biconnected; cannot happen for a block
      for (Vertex v = last; v != -1; v = prev[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      path.push_back(end);
    }

    const std::vector<Vertex>& walk = faces[chosen_face].walk;
    const int len = static_cast<int>(walk.size());
    const Vertex a = path.front(), z = path.back();
    int ia = -1, iz = -1;
    for (int i = 0; i < len; ++i) {
      if (walk[i] == a) ia = i;
      if (walk[i] == z) iz = i;
    }
    std::vector<Vertex> f1, f2;
    for (int i = ia;; i = (i + 1) % len) {
      f1.push_back(walk[i]);
      if (i == iz) break;
    }
    for (std::size_t k = path.size() - 2; k >= 1; --k) f1.push_back(path[k]);
    for (int i = iz;; i = (i + 1) % len) {
      f2.push_back(walk[i]);
      if (i == ia) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
    faces[chosen_face] = make_face(std::move(f1));
    faces.push_back(make_face(std::move(f2)));
    add_path(path, false);
  }
  if (out) *out = std::move(faces);
  return true;
}

// Appends each block's local rotation to the global one; concatenating at cut
// vertices keeps the embedding planar.
bool build_rotation(const Graph& g, Embedding* emb) {
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
  std::vector<Block> blocks = BlockFinder(g).take();
  if (emb) emb->rotation.assign(static_cast<std::size_t>(g.order()), {});
  std::vector<FaceCycle> faces;
  for (const Block& b : blocks) {
    const int nv = popcount(b.vertices);
    if (nv == 2) {
      if (emb) {
        Vertex x = lowest(b.vertices), y = lowest(b.vertices & ~bit(x));
        emb->rotation[x].push_back(y);
        emb->rotation[y].push_back(x);
      }
      continue;
    }
    if (!embed_block(b, emb ? &faces : nullptr)) return false;
    if (!emb) continue;
    static thread_local std::array<std::array<Vertex, kMaxOrder>, kMaxOrder> succ;
    for (const FaceCycle& f : faces) {
      const std::size_t L = f.walk.size();
      for (std::size_t i = 0; i < L; ++i) {
        Vertex u = f.walk[i], v = f.walk[(i + 1) % L], w = f.walk[(i + 2) % L];
        succ[v][u] = w;
      }
    }
    for_each_bit(b.vertices, [&](Vertex v) {
      const Vertex start = lowest(b.adj[v]);
      Vertex cur = start;
      do {
        emb->rotation[v].push_back(cur);
        cur = succ[v][cur];
      } while (cur != start);
    });
  }
  return true;
}

}  // namespace

bool is_planar(const Graph& g) { return build_rotation(g, nullptr); }

Embedding embed_components(const Graph& g) {
  Embedding e;
  if (!build_rotation(g, &e)) throw NonPlanarError("graph is not planar: " + to_string(g));
  return e;
}

Embedding embed(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedError("embed requires a connected graph");
  return embed_components(g);
}

std::vector<Face> faces(const Embedding& e) {
  const int n = static_cast<int>(e.rotation.size());
  // position of each neighbour inside rotation[v]
  std::vector<std::array<int, kMaxOrder>> index(static_cast<std::size_t>(n));
  std::vector<VertexMask> used(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < e.rotation[v].size(); ++i) index[v][e.rotation[v][i]] = static_cast<int>(i);
  std::vector<Face> out;
  for (Vertex v = 0; v < n; ++v) {
    if (e.rotation[v].empty()) {
      out.push_back(Face{{v}, 0});
      continue;
    }
    for (Vertex w : e.rotation[v]) {
      if (used[v] & bit(w)) continue;
      Face f;
      Vertex a = v, b = w;
      while (!(used[a] & bit(b))) {
        used[a] |= bit(b);
        f.walk.push_back(a);
        const auto& rot = e.rotation[b];
        Vertex c = rot[(index[b][a] + 1) % rot.size()];
        a = b;
        b = c;
      }
      f.length = static_cast<int>(f.walk.size());
      out.push_back(std::move(f));
    }
  }
  return out;
}

bool is_plane_embedding(const Graph& g, const Embedding& e) {
  if (static_cast<int>(e.rotation.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexMask seen = 0;
    for (Vertex w : e.rotation[v]) {
      if (w < 0 || w >= g.order() || (seen & bit(w))) return false;
      seen |= bit(w);
    }
    if (seen != g.neighbors(v)) return false;
  }
  const std::vector<Face> fs = faces(e);
  for (VertexMask comp : g.components()) {
    int nv = popcount(comp), ne = 0, nf = 0;
    for_each_bit(comp, [&](Vertex v) { ne += g.degree(v); });
    ne /= 2;
    for (const Face& f : fs)
      if (comp & bit(f.walk.front())) ++nf;
    if (nv - ne + nf != 2) return false;
  }
  return true;
}

}  // namespace tpl
