#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tpl/graph.hpp"

namespace tpl {

/// Exact isomorphism-class key: order byte followed by the canonically
/// relabeled adjacency rows. Equal keys iff isomorphic graphs.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
  /// Automorphisms discovered during the search (each as image[v]). They
  /// generate a subgroup of Aut(g); orbits under them are true orbit subsets.
  std::vector<std::vector<Vertex>> automorphisms;
};

CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Graph& g, const CanonicalLabeling& labeling);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Orbit representative array (min vertex of each orbit) under a permutation set.
std::vector<Vertex> orbits_of(int n, const std::vector<std::vector<Vertex>>& generators);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept;
};

}  // namespace tpl
