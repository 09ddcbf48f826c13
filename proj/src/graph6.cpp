#include "tpl/graph6.hpp"

namespace tpl {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Graph6Error("graph6 encoding supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int fill = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        fill = 0;
      }
    }
  if (fill) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw Graph6Error("graph6 character outside 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > 62) throw Graph6Error("unsupported graph6 length byte (n > 62)");
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long groups = (bits + 5) / 6;
  if (static_cast<long>(text.size()) - 1 != groups)
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(groups + 1) + " bytes");
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bits % 6) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw Graph6Error("graph6 padding bits are not zero");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace tpl
