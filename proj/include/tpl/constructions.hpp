#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tpl/blocks.hpp"
#include "tpl/counting.hpp"
#include "tpl/graph.hpp"

namespace tpl {

enum class TheoremId { C4C3, C4C5, C3C4, C3K4, C5C3, C3C5, C3C6, C6C3, P5pair, P5triple };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::C4C3,   TheoremId::C4C5, TheoremId::C3C4, TheoremId::C3K4,
                                             TheoremId::C5C3,   TheoremId::C3C5, TheoremId::C3C6, TheoremId::C6C3,
                                             TheoremId::P5pair, TheoremId::P5triple};

enum class BoundKind { Exact, UpperBound };

// What is maximized: cycles of a length, or length-4 paths over a vertex pair
// or a vertex triple.
enum class Counted { C3, C4, C5, C6, P5Pair, P5Triple };

struct BoundSpec {
  TheoremId id;
  BoundKind kind;
  Counted counted;
  std::optional<Pattern> forbidden;
  int min_n;
  bool large_n_only;  // stated for sufficiently large n: never asserted
  Rational (*formula)(int n);
};

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonPlanarTreeShape : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

const BoundSpec& bound_spec(TheoremId id);
std::string_view theorem_name(TheoremId id);  // "C4C3"
TheoremId parse_theorem(std::string_view name);  // accepts "C4C3" or "T_C4C3"; throws FormulaError
std::string_view counted_name(Counted c);

/// Throws FormulaError below the theorem's validity threshold.
Rational formula_value(const BoundSpec& spec, int n);
inline Rational formula_value(TheoremId id, int n) { return formula_value(bound_spec(id), n); }

// Closed forms, defined for every n >= 1.
Rational h_value(int n);
Rational h1_value(int n);
Rational binom2(int m);

Graph build_k2_bipartite(int n);

struct JnSpec {
  int n = 0;
  int c = 0;
  std::vector<Edge> tree;  // on tree ids 0..t-1, t = n-2-c; id 0 lies in A
};

struct JnResult {
  Graph graph;
  bool balanced = false;  // |c - (t-1)| <= 1
};

/// Vertex 0 is u, 1 is v, then C, then the tree in id order.
JnResult build_jn(const JnSpec& spec);
JnSpec default_jn_spec(int n);
inline constexpr int kMaxJnOrder = 12;
std::vector<Graph> enumerate_jn(int n);

/// u1,u2,u3 = 0,1,2; z1,z2 = 3,4; then A (on u1,u2), B (on u2,u3), C (on u1,u3).
Graph build_hn(int n);
struct HnClasses {
  int a, b, c;
};
HnClasses hn_classes(int n);

Graph build_k4_stack(int t);

/// Hubs 0..k-1, z1 = k, z2 = k+1, then class i on hubs i and i+1 mod k.
Graph build_g_even(int n, int k);
/// Hubs 0..k-1 with z1,z2 on every hub; blow-up class i on hubs i-1,i for
/// i = 1..k-1; then a path tree with A on hub k-1 and B on hub 0.
Graph build_g_odd(int n, int k);
inline int g_even_min_order(int k) { return 2 * k + 2; }
inline int g_odd_min_order(int k) { return 2 * k + 3; }

}  // namespace tpl
