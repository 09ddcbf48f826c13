#include "tpl/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "tpl/canonical.hpp"
#include "tpl/planarity.hpp"

namespace tpl {

namespace {

constexpr std::pair<std::string_view, Constraint> kNames[] = {
    {"planar", Constraint::Planar}, {"c3free", Constraint::C3free}, {"c4free", Constraint::C4free},
    {"c5free", Constraint::C5free}, {"c6free", Constraint::C6free}, {"k4free", Constraint::K4free},
    {"connected", Constraint::Connected},
};

class Generator {
 public:
  Generator(const EnumSpec& spec, int stop_at) : spec_(spec), stop_at_(stop_at), forbidden_(spec.constraints.forbidden()) {}

  // Visits every accepted node on the level stop_at below g.
  void descend(const Graph& g, const GraphSink& sink) {
    if (g.order() == stop_at_) {
      sink(g);
      return;
    }
    for (const Graph& child : children(g)) descend(child, sink);
  }

 private:
  std::vector<Graph> children(const Graph& parent) {
    const int m = parent.order();
    const CanonicalForm parent_form = canonical_form(parent);
    // A planar graph has a vertex of degree at most five.
    const int cap = spec_.constraints.has(Constraint::Planar) ? 5 : m;
    const int max_size = std::min(cap, parent.min_degree() + 1);
    std::vector<Graph> out;
    std::set<CanonicalForm> seen;
    Graph base = parent.with_vertex(0);
    auto consider = [&](const Graph& g, int size) {
      // The new vertex must be a vertex of minimum degree.
      if (g.min_degree() != size) return;
      CanonicalLabeling lab = canonical_labeling(g);
      Vertex w = -1;
      for (Vertex x = 0; x <= m; ++x)
        if (g.degree(x) == size && (w < 0 || lab.position[x] > lab.position[w])) w = x;
      if (w != m) {
        const auto orbit = orbits_of(m + 1, lab.automorphisms);
        if (orbit[w] != orbit[m] && canonical_form(g.without_vertex(w)) != parent_form) return;
      }
      if (seen.insert(canonical_form(g, lab)).second) out.push_back(g);
    };
    consider(base, 0);
    std::vector<Vertex> chosen;
    // Neighbour sets grow in increasing vertex order; every constraint is
    // monotone in the set, so a failing set prunes all its supersets.
    std::function<void(const Graph&, Vertex)> grow = [&](const Graph& g, Vertex from) {
      if (static_cast<int>(chosen.size()) == max_size) return;
      for (Vertex x = from; x < m; ++x) {
        bool ok = true;
        for (Pattern f : forbidden_)
          if (edge_creates(g, m, x, f)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Graph next = g.with_edge(m, x);
        if (spec_.constraints.has(Constraint::Planar) && !is_planar(next)) continue;
        chosen.push_back(x);
        consider(next, static_cast<int>(chosen.size()));
        grow(next, x + 1);
        chosen.pop_back();
      }
    };
    if (m > 0) grow(base, 0);
    return out;
  }

  const EnumSpec& spec_;
  int stop_at_;
  std::vector<Pattern> forbidden_;
};

void check_spec(const EnumSpec& spec) {
  if (spec.n < 1) throw EnumError("n must be at least 1");
  if (spec.n > kMaxEnumOrder) throw EnumError("exhaustive enumeration is capped at n = " + std::to_string(kMaxEnumOrder));
}

template <typename F>
void parallel_indices(std::size_t count, int threads, F&& f) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<Pattern> ConstraintSet::forbidden() const {
  std::vector<Pattern> out;
  if (has(Constraint::C3free)) out.push_back(Pattern::C3);
  if (has(Constraint::C4free)) out.push_back(Pattern::C4);
  if (has(Constraint::C5free)) out.push_back(Pattern::C5);
  if (has(Constraint::C6free)) out.push_back(Pattern::C6);
  if (has(Constraint::K4free)) out.push_back(Pattern::K4);
  return out;
}

ConstraintSet parse_constraints(std::string_view text) {
  ConstraintSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string word(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (word.empty()) continue;
    bool found = false;
    for (auto [name, c] : kNames)
      if (name == word) {
        out = out.with(c);
        found = true;
      }
    if (!found) throw EnumError("unknown constraint: " + word);
  }
  return out;
}

std::string to_string(ConstraintSet cs) {
  std::string out;
  for (auto [name, c] : kNames)
    if (cs.has(c)) {
      if (!out.empty()) out += ',';
      out += name;
    }
  return out;
}

ConstraintSet forbidding(Pattern p) {
  switch (p) {
    case Pattern::C3: return {Constraint::C3free};
    case Pattern::C4: return {Constraint::C4free};
    case Pattern::C5: return {Constraint::C5free};
    case Pattern::C6: return {Constraint::C6free};
    case Pattern::K4: return {Constraint::K4free};
  }
  return {};
}

bool satisfies(const Graph& g, ConstraintSet cs) {
  for (Pattern f : cs.forbidden())
    if (!is_f_free(g, f)) return false;
  if (cs.has(Constraint::Connected) && !g.is_connected()) return false;
  if (cs.has(Constraint::Planar) && !is_planar(g)) return false;
  return true;
}

int default_split_depth(int n) { return std::min(n, std::max(1, n - 3)); }

std::vector<WorkUnit> work_units(const EnumSpec& spec, int split_depth) {
  check_spec(spec);
  const int depth = std::clamp(split_depth <= 0 ? default_split_depth(spec.n) : split_depth, 1, spec.n);
  std::vector<WorkUnit> out;
  Generator gen(spec, depth);
  gen.descend(Graph(1), [&](const Graph& g) { out.push_back({out.size(), g}); });
  return out;
}

void enumerate_unit(const EnumSpec& spec, const WorkUnit& unit, const GraphSink& sink) {
  check_spec(spec);
  Generator gen(spec, spec.n);
  gen.descend(unit.root, [&](const Graph& g) {
    // Connectivity is not hereditary, so it only filters the last level;
    // the rest is re-verified as a second line of defence.
    if (satisfies(g, spec.constraints)) sink(g);
  });
}

void enumerate(const EnumSpec& spec, const GraphSink& sink, const EnumOptions& options) {
  const auto units = work_units(spec, options.split_depth);
  if (options.threads <= 1) {
    for (const WorkUnit& u : units) {
      if (options.skip_unit && options.skip_unit(u.index)) continue;
      enumerate_unit(spec, u, sink);
      if (options.unit_done) options.unit_done(u.index);
    }
    return;
  }
  // Workers fill per-unit buffers; the caller's thread drains them in order.
  std::vector<std::vector<Graph>> buffers(units.size());
  std::vector<char> ready(units.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::thread workers([&] {
    parallel_indices(units.size(), options.threads, [&](std::size_t i) {
      std::vector<Graph> local;
      if (!(options.skip_unit && options.skip_unit(i)))
        enumerate_unit(spec, units[i], [&](const Graph& g) { local.push_back(g); });
      std::lock_guard<std::mutex> lock(mu);
      buffers[i] = std::move(local);
      ready[i] = 1;
      cv.notify_all();
    });
  });
  for (std::size_t i = 0; i < units.size(); ++i) {
    std::vector<Graph> batch;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return ready[i] != 0; });
      batch = std::move(buffers[i]);
    }
    const bool skipped = options.skip_unit && options.skip_unit(i);
    for (const Graph& g : batch) sink(g);
    if (!skipped && options.unit_done) options.unit_done(i);
  }
  workers.join();
}

std::vector<Graph> enumerate_all(const EnumSpec& spec, const EnumOptions& options) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); }, options);
  return out;
}

void for_each_unit_parallel(const EnumSpec& spec, int threads, int split_depth,
                            const std::function<void(const WorkUnit&, const Graph&)>& work) {
  const auto units = work_units(spec, split_depth);
  parallel_indices(units.size(), threads, [&](std::size_t i) {
    enumerate_unit(spec, units[i], [&](const Graph& g) { work(units[i], g); });
  });
}

Graph random_planar_ffree(int n, ConstraintSet constraints, std::uint64_t seed) {
  if (n < 1 || n > kMaxOrder) throw EnumError("random graphs need 1 <= n <= 64");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  // Fisher-Yates with an explicit draw so the order is library independent.
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
  const auto forbidden = constraints.forbidden();
  Graph g(n);
  auto addable = [&](Vertex u, Vertex v) {
    for (Pattern f : forbidden)
      if (edge_creates(g, u, v, f)) return false;
    return is_planar(g.with_edge(u, v));
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [u, v] : pairs) {
      if (g.adjacent(u, v) || !addable(u, v)) continue;
      g = g.with_edge(u, v);
      grew = true;
    }
  }
  return g;
}

}  // namespace tpl
