#pragma once

#include <string>
#include <string_view>

#include "tpl/graph.hpp"

namespace tpl {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard graph6 for n <= 62 (single length byte, no ">>graph6<<" header).
std::string encode_graph6(const Graph& g);
/// Accepts one encoded graph; a trailing newline or carriage return is ignored.
Graph decode_graph6(std::string_view text);

}  // namespace tpl
