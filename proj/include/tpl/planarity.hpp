#pragma once

#include <stdexcept>
#include <vector>

#include "tpl/graph.hpp"

namespace tpl {

/// Combinatorial embedding: rotation[v] is the cyclic order of v's neighbours.
struct Embedding {
  std::vector<std::vector<Vertex>> rotation;
};

/// A face as a closed walk. length counts darts (edge sides); a bridge
/// contributes two. An isolated vertex forms a face of length 0.
struct Face {
  std::vector<Vertex> walk;
  int length = 0;
};

class NonPlanarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path-addition planarity test, run per biconnected component.
bool is_planar(const Graph& g);

/// Throws DisconnectedError or NonPlanarError.
Embedding embed(const Graph& g);

/// Embeds every component independently; only throws NonPlanarError.
Embedding embed_components(const Graph& g);

/// Traverses faces: the dart after (u,v) is (v, successor of u in rotation[v]).
std::vector<Face> faces(const Embedding& e);

/// Rotation lists match adjacency and every component satisfies Euler's formula.
bool is_plane_embedding(const Graph& g, const Embedding& e);

}  // namespace tpl
