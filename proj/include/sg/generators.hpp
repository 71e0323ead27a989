#pragma once

#include <random>

#include "sg/graph.hpp"

namespace sg {

// The only random engine in the library; callers own and seed it.
using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
double uniform_real(Rng& rng);              // [0, 1)

Graph random_gnp(int n, double p, Rng& rng);
// Uniform-ish random labelled tree via random attachment to an earlier vertex.
Graph random_tree(int n, Rng& rng);
// k-tree on n >= k+1 vertices: start from K_{k+1}, each new vertex joins a random k-clique.
Graph random_ktree(int n, int k, Rng& rng);
// Spanning subgraph of a random k-tree keeping each edge with probability keep;
// treewidth is at most k.
Graph random_partial_ktree(int n, int k, double keep, Rng& rng);

// Relabels vertices by a uniform random permutation.
Graph shuffle_labels(const Graph& g, Rng& rng);

}  // namespace sg
