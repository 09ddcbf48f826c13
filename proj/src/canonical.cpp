#include "tpl/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace tpl {

namespace {

using Cells = std::vector<VertexMask>;
using Certificate = std::vector<VertexMask>;

// Splits cells until every cell is equitable with respect to every other.
// Fragments are ordered by neighbour count, so the outcome depends only on
// the structure of the graph and the incoming ordered partition.
void refine(std::span<const VertexMask> adj, Cells& cells) {
  Cells next;
  next.reserve(adj.size());
  std::size_t splitter = 0;
  while (splitter < cells.size()) {
    const VertexMask w = cells[splitter];
    next.clear();
    bool split = false;
    for (VertexMask x : cells) {
      if ((x & (x - 1)) == 0) {
        next.push_back(x);
        continue;
      }
      int counts[kMaxOrder + 1];
      int lo = kMaxOrder, hi = 0;
      for_each_bit(x, [&](Vertex v) {
        int c = popcount(adj[v] & w);
        counts[v] = c;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      });
      if (lo == hi) {
        next.push_back(x);
        continue;
      }
      split = true;
      // Distinct counts are few; gather them in increasing order.
      VertexMask remaining = x;
      while (remaining) {
        int c = kMaxOrder + 1;
        for_each_bit(remaining, [&](Vertex v) { c = std::min(c, counts[v]); });
        VertexMask part = 0;
        for_each_bit(remaining, [&](Vertex v) {
          if (counts[v] == c) part |= bit(v);
        });
        next.push_back(part);
        remaining &= ~part;
      }
    }
    if (split) {
      cells.swap(next);
      splitter = 0;
    } else {
      ++splitter;
    }
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), adj_(g.rows()) { seed_twin_automorphisms(); }

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      // Degree classes first; refinement would find them anyway.
      std::vector<int> degs;
      for (int v = 0; v < n_; ++v) degs.push_back(g_.degree(v));
      std::vector<int> sorted = degs;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int d : sorted) {
        VertexMask cell = 0;
        for (int v = 0; v < n_; ++v)
          if (degs[v] == d) cell |= bit(v);
        cells.push_back(cell);
      }
    }
    std::vector<Vertex> prefix;
    descend(cells, prefix);
    CanonicalLabeling out;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  // Vertices with equal open or closed neighbourhoods can be swapped freely.
  void seed_twin_automorphisms() {
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    for (int a = 0; a < n_; ++a) {
      if (used[a]) continue;
      Vertex prev = a;
      for (int b = a + 1; b < n_; ++b) {
        if (used[b]) continue;
        const VertexMask ra = adj_[a] & ~(bit(a) | bit(b));
        const VertexMask rb = adj_[b] & ~(bit(a) | bit(b));
        if (ra != rb) continue;
        used[b] = true;
        std::vector<Vertex> perm(static_cast<std::size_t>(n_));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[prev], perm[b]);
        autos_.push_back(std::move(perm));
        prev = b;
      }
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> lab;
    lab.reserve(static_cast<std::size_t>(n_));
    for (VertexMask c : cells) lab.push_back(lowest(c));
    Vertex pos[kMaxOrder];
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Certificate cert(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      VertexMask r = 0;
      for_each_bit(adj_[lab[i]], [&](Vertex v) { r |= bit(pos[v]); });
      cert[i] = r;
    }
    if (best_lab_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
    } else if (cert == best_cert_) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) perm[lab[i]] = best_lab_[i];
      autos_.push_back(std::move(perm));
    }
  }

  bool fixes(const std::vector<Vertex>& perm, const std::vector<Vertex>& prefix) const {
    for (Vertex p : prefix)
      if (perm[p] != p) return false;
    return true;
  }

  Vertex find(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void descend(Cells cells, std::vector<Vertex>& prefix) {
    refine(adj_, cells);
    if (cells.size() == static_cast<std::size_t>(n_)) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    int target_size = kMaxOrder + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int s = popcount(cells[i]);
      if (s > 1 && s < target_size) {
        target = i;
        target_size = s;
      }
    }
    const VertexMask cell = cells[target];
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::size_t seen_autos = static_cast<std::size_t>(-1);
    VertexMask explored = 0;
    for_each_bit(cell, [&](Vertex v) {
      if (seen_autos != autos_.size()) {
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& perm : autos_) {
          if (!fixes(perm, prefix)) continue;
          for (Vertex x = 0; x < n_; ++x) {
            Vertex a = find(parent, x), b = find(parent, perm[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
        seen_autos = autos_.size();
      }
      const Vertex root = find(parent, v);
      bool redundant = false;
      for_each_bit(explored, [&](Vertex u) {
        if (find(parent, u) == root) redundant = true;
      });
      if (redundant) return;
      explored |= bit(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(bit(v));
          child.push_back(cell & ~bit(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    });
  }

  const Graph& g_;
  int n_;
  std::span<const VertexMask> adj_;
  Certificate best_cert_;
  std::vector<Vertex> best_lab_;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).position); }

CanonicalForm canonical_form(const Graph& g, const CanonicalLabeling& lab) {
  const int n = g.order();
  Vertex at[kMaxOrder];
  for (Vertex v = 0; v < n; ++v) at[lab.position[v]] = v;
  CanonicalForm out;
  out.bytes.reserve(static_cast<std::size_t>(1 + (n * (n - 1) / 2 + 7) / 8));
  out.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int fill = 0;
  for (int j = 1; j < n; ++j) {
    const VertexMask row = g.neighbors(at[j]);
    for (int i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((row >> at[i]) & 1U));
      if (++fill == 8) {
        out.bytes.push_back(acc);
        acc = 0;
        fill = 0;
      }
    }
  }
  if (fill) out.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - fill)));
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(g, canonical_labeling(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<Vertex> orbits_of(int n, const std::vector<std::vector<Vertex>>& generators) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& perm : generators)
    for (Vertex x = 0; x < n; ++x) {
      Vertex a = find(x), b = find(perm[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (Vertex x = 0; x < n; ++x) parent[x] = find(x);
  return parent;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto b : c.bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace tpl
