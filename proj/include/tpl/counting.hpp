#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tpl/graph.hpp"

namespace tpl {

using Count = std::uint64_t;

enum class Pattern { C3, C4, C5, C6, K4 };

std::string_view pattern_name(Pattern p);
Pattern parse_pattern(std::string_view name);  // "c3".."c6", "k4"; throws

class CountError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMinCycle = 3;
inline constexpr int kMaxCycle = 8;

/// Unlabelled k-cycles, 3 <= k <= 8. Each cycle is generated once from its
/// minimum vertex, in the direction of the smaller of its two neighbours.
Count count_cycles(const Graph& g, int k);
Count count_cycles_through(const Graph& g, Vertex v, int k);
bool has_cycle(const Graph& g, int k);
/// True iff some k-cycle passes through v.
bool has_cycle_through(const Graph& g, Vertex v, int k);

Count count_k4(const Graph& g);

/// Simple paths u-a-b-c-v with five distinct vertices.
Count count_paths4(const Graph& g, Vertex u, Vertex v);
Count triple_path_total(const Graph& g, Vertex u1, Vertex u2, Vertex u3);

bool is_f_free(const Graph& g, Pattern f);

/// Whether adding edge uv to g would create a copy of f (uv must be absent).
bool edge_creates(const Graph& g, Vertex u, Vertex v, Pattern f);

}  // namespace tpl
