#include "tpl/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>

#include "tpl/canonical.hpp"
#include "tpl/planarity.hpp"

namespace tpl {

namespace {

Rational floor_of(Rational r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return Rational(q);
}

Rational c4_formula(int n) { return binom2(n - 2); }
Rational c3c4_formula(int n) { return Rational(5 * (n - 2), 7); }
Rational c3k4_formula(int n) { return Rational(7 * n, 3) - 6; }
Rational c5c3_formula(int n) { return Rational(static_cast<std::int64_t>((n - 3) / 2) * ((n - 2) / 2)); }
Rational c3c5_formula(int n) { return floor_of(Rational(8 * n - 22, 5)); }
Rational c3c6_formula(int n) { return Rational(35 * n - 98, 18); }
Rational p5pair_formula(int n) { return Rational(static_cast<std::int64_t>(n - 1) * (n - 1), 4) - 2; }
Rational p5triple_formula(int n) { return Rational(3 * static_cast<std::int64_t>(n + 1) * (n + 1), 9) - 6; }

const std::array<BoundSpec, 10> kSpecs = {{
    {TheoremId::C4C3, BoundKind::Exact, Counted::C4, Pattern::C3, 4, false, c4_formula},
    {TheoremId::C4C5, BoundKind::Exact, Counted::C4, Pattern::C5, 4, false, c4_formula},
    {TheoremId::C3C4, BoundKind::UpperBound, Counted::C3, Pattern::C4, 4, false, c3c4_formula},
    {TheoremId::C3K4, BoundKind::UpperBound, Counted::C3, Pattern::K4, 3, false, c3k4_formula},
    {TheoremId::C5C3, BoundKind::Exact, Counted::C5, Pattern::C3, 5, false, c5c3_formula},
    {TheoremId::C3C5, BoundKind::UpperBound, Counted::C3, Pattern::C5, 11, false, c3c5_formula},
    {TheoremId::C3C6, BoundKind::UpperBound, Counted::C3, Pattern::C6, 18, false, c3c6_formula},
    {TheoremId::C6C3, BoundKind::Exact, Counted::C6, Pattern::C3, 6, true, h_value},
    {TheoremId::P5pair, BoundKind::UpperBound, Counted::P5Pair, Pattern::C3, 5, false, p5pair_formula},
    {TheoremId::P5triple, BoundKind::UpperBound, Counted::P5Triple, Pattern::C3, 5, false, p5triple_formula},
}};

// Sizes as equal as possible; earlier parts take the remainder.
std::vector<int> balanced_split(int total, int parts) {
  std::vector<int> out(static_cast<std::size_t>(parts), total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

std::vector<Edge> path_tree(int t) {
  std::vector<Edge> out;
  for (int i = 0; i + 1 < t; ++i) out.emplace_back(i, i + 1);
  return out;
}

// Colour of every tree id, 0 for A; empty if the edges are not a tree on 0..t-1.
std::vector<int> tree_colouring(int t, const std::vector<Edge>& tree) {
  if (t < 1 || static_cast<int>(tree.size()) != t - 1) return {};
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t));
  for (auto [a, b] : tree) {
    if (a < 0 || b < 0 || a >= t || b >= t || a == b) return {};
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(static_cast<std::size_t>(t), -1);
  std::vector<int> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        stack.push_back(y);
      }
  }
  if (std::count(colour.begin(), colour.end(), -1) > 0) return {};
  return colour;
}

std::vector<std::vector<Edge>> labeled_trees(int t) {
  std::vector<std::vector<Edge>> out;
  if (t == 1) return {{}};
  if (t == 2) return {{{0, 1}}};
  std::vector<int> seq(static_cast<std::size_t>(t - 2), 0);
  for (;;) {
    // Pruefer decoding.
    std::vector<int> degree(static_cast<std::size_t>(t), 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int a = -1, b = -1;
    for (int i = 0; i < t; ++i)
      if (degree[i] == 1) (a < 0 ? a : b) = i;
    edges.emplace_back(a, b);
    out.push_back(std::move(edges));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == t) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw ConstructionError(what);
}

}  // namespace

const BoundSpec& bound_spec(TheoremId id) { return kSpecs[static_cast<std::size_t>(id)]; }

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::C4C3: return "C4C3";
    case TheoremId::C4C5: return "C4C5";
    case TheoremId::C3C4: return "C3C4";
    case TheoremId::C3K4: return "C3K4";
    case TheoremId::C5C3: return "C5C3";
    case TheoremId::C3C5: return "C3C5";
    case TheoremId::C3C6: return "C3C6";
    case TheoremId::C6C3: return "C6C3";
    case TheoremId::P5pair: return "P5pair";
    case TheoremId::P5triple: return "P5triple";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view name) {
  if (name.size() > 2 && (name[0] == 'T' || name[0] == 't') && name[1] == '_') name.remove_prefix(2);
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
  };
  for (TheoremId id : kAllTheorems)
    if (lower(theorem_name(id)) == lower(name)) return id;
  throw FormulaError("unknown theorem id: " + std::string(name));
}

std::string_view counted_name(Counted c) {
  switch (c) {
    case Counted::C3: return "C3";
    case Counted::C4: return "C4";
    case Counted::C5: return "C5";
    case Counted::C6: return "C6";
    case Counted::P5Pair: return "P5 pair";
    case Counted::P5Triple: return "P5 triple";
  }
  return "?";
}

Rational formula_value(const BoundSpec& spec, int n) {
  if (n < spec.min_n)
    throw FormulaError(std::string(theorem_name(spec.id)) + " needs n >= " + std::to_string(spec.min_n));
  return spec.formula(n);
}

Rational binom2(int m) { return Rational(static_cast<std::int64_t>(m) * (m - 1) / 2); }

Rational h_value(int n) {
  const std::int64_t m = n;
  const Rational base = Rational(m * m * m, 27) + Rational(m * m, 9);
  switch (n % 3) {
    case 0: return base - 2 * m + 2;
    case 1: return base - 2 * m + Rational(50, 27);
    default: return base - Rational(17 * m, 9) + Rational(55, 27);
  }
}

Rational h1_value(int n) {
  const std::int64_t m = n;
  switch (n % 3) {
    case 0: return Rational(m * m, 9) - 2;
    case 1: return Rational((m - 1) * (m + 2), 9) - 2;
    default: return Rational((m + 1) * (m + 1), 9) - 2;
  }
}

Graph build_k2_bipartite(int n) {
  require(n >= 4, "K_{2,n-2} needs n >= 4");
  return complete_bipartite(2, n - 2);
}

JnResult build_jn(const JnSpec& spec) {
  require(spec.c >= 1, "J_n needs c >= 1");
  const int t = spec.n - 2 - spec.c;
  require(t >= 2, "J_n needs at least one tree edge");
  require(spec.n <= kMaxOrder, "J_n order too large");
  const std::vector<int> colour = tree_colouring(t, spec.tree);
  require(!colour.empty(), "J_n tree must be a spanning tree on ids 0..t-1");
  Graph g(spec.n);
  const Vertex u = 0, v = 1, first_tree = 2 + spec.c;
  for (int i = 0; i < spec.c; ++i) g = g.with_edge(u, 2 + i).with_edge(v, 2 + i);
  for (int i = 0; i < t; ++i) g = g.with_edge(colour[i] == 0 ? u : v, first_tree + i);
  for (auto [a, b] : spec.tree) g = g.with_edge(first_tree + a, first_tree + b);
  if (!is_planar(g)) throw NonPlanarTreeShape("tree shape makes J_n non-planar");
  return {g, std::abs(spec.c - (t - 1)) <= 1};
}

JnSpec default_jn_spec(int n) {
  require(n >= 5, "J_n needs n >= 5");
  const int c = (n - 2) / 2;  // ceil((n-3)/2)
  return {n, c, path_tree(n - 2 - c)};
}

std::vector<Graph> enumerate_jn(int n) {
  require(n >= 5, "J_n needs n >= 5");
  require(n <= kMaxJnOrder, "enumerate_jn is limited to n <= 12");
  std::map<CanonicalForm, Graph> members;
  for (int c = 1; c <= n - 4; ++c) {
    const int t = n - 2 - c;
    if (std::abs(c - (t - 1)) > 1) continue;
    for (const auto& tree : labeled_trees(t)) {
      try {
        Graph g = build_jn({n, c, tree}).graph;
        members.emplace(canonical_form(g), canonical_graph(g));
      } catch (const NonPlanarTreeShape&) {
      }
    }
  }
  std::vector<Graph> out;
  for (auto& [form, g] : members) out.push_back(g);
  return out;
}

HnClasses hn_classes(int n) {
  require(n >= 6, "H_n needs n >= 6");
  auto s = balanced_split(n - 5, 3);
  return {s[0], s[1], s[2]};
}

Graph build_hn(int n) {
  const HnClasses cls = hn_classes(n);
  Graph g(n);
  for (Vertex u = 0; u < 3; ++u) g = g.with_edge(u, 3).with_edge(u, 4);
  Vertex next = 5;
  const std::array<std::pair<int, Edge>, 3> groups = {{{cls.a, {0, 1}}, {cls.b, {1, 2}}, {cls.c, {0, 2}}}};
  for (auto [size, hubs] : groups)
    for (int i = 0; i < size; ++i, ++next) g = g.with_edge(next, hubs.first).with_edge(next, hubs.second);
  return g;
}

Graph build_k4_stack(int t) {
  require(t >= 1, "k4_stack needs t >= 1");
  require(3 * t <= kMaxOrder, "k4_stack order too large");
  Graph g = complete_graph(3);
  std::array<Vertex, 3> face = {0, 1, 2};
  for (int s = 1; s < t; ++s) {
    const auto [x, y, z] = face;
    const Vertex x2 = 3 * s, y2 = 3 * s + 1, z2 = 3 * s + 2;
    g = g.with_vertex(bit(x) | bit(y));
    g = g.with_vertex(bit(y) | bit(z) | bit(x2));
    g = g.with_vertex(bit(z) | bit(x) | bit(x2) | bit(y2));
    face = {x, x2, z2};
  }
  return g;
}

Graph build_g_even(int n, int k) {
  require(k >= 2, "G_even needs k >= 2");
  require(n >= g_even_min_order(k), "G_even needs n >= 2k+2");
  require(n <= kMaxOrder, "G_even order too large");
  Graph g(n);
  const Vertex z1 = k, z2 = k + 1;
  for (Vertex h = 0; h < k; ++h) g = g.with_edge(h, z1).with_edge(h, z2);
  Vertex next = k + 2;
  const auto sizes = balanced_split(n - k - 2, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < sizes[i]; ++j, ++next) g = g.with_edge(next, i).with_edge(next, (i + 1) % k);
  return g;
}

Graph build_g_odd(int n, int k) {
  require(k >= 2, "G_odd needs k >= 2");
  require(n >= g_odd_min_order(k), "G_odd needs n >= 2k+3");
  require(n <= kMaxOrder, "G_odd order too large");
  // Slots: k-1 blow-up sets (each counting z1,z2) and |A|+|B|-1.
  const auto slots = balanced_split(n + k - 5, k);
  Graph g(n);
  const Vertex z1 = k, z2 = k + 1;
  for (Vertex h = 0; h < k; ++h) g = g.with_edge(h, z1).with_edge(h, z2);
  Vertex next = k + 2;
  for (int i = 1; i < k; ++i)
    for (int j = 0; j < slots[i - 1] - 2; ++j, ++next) g = g.with_edge(next, i - 1).with_edge(next, i);
  const int t = slots[k - 1] + 1;
  for (int i = 0; i < t; ++i, ++next) {
    g = g.with_edge(next, i % 2 == 0 ? k - 1 : 0);
    if (i > 0) g = g.with_edge(next, next - 1);
  }
  if (!is_planar(g)) throw ConstructionError("G_odd came out non-planar");
  return g;
}

}  // namespace tpl
