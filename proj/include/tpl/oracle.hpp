#pragma once

#include <vector>

#include "tpl/counting.hpp"
#include "tpl/graph.hpp"

/// Exponential-time reference implementations. They share no code with the
/// fast paths they cross-check and are only meant for small graphs.
namespace tpl::oracle {

/// k-subsets times vertex orderings; each cycle seen 2k times.
Count count_cycles(const Graph& g, int k);
/// Ordered vertex 5-tuples starting at u and ending at v.
Count count_paths4(const Graph& g, Vertex u, Vertex v);
/// Lexicographically smallest upper-triangle bit string over all n! orderings.
std::vector<bool> permutation_key(const Graph& g);
/// Adjacency-preserving bijection search over all permutations.
bool is_isomorphic(const Graph& g, const Graph& h);
/// Searches for a subdivision of K5 or K3,3 by edge deletion and smoothing.
bool has_kuratowski_subdivision(const Graph& g);

}  // namespace tpl::oracle
