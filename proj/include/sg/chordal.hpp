#pragma once

#include <optional>

#include "sg/treedecomp.hpp"

namespace sg {

// Elimination order: order.seq[0] is eliminated first. Convention used
// throughout: the neighbours of v that come later in the order form a clique,
// and simplicial[v] records whether that holds at v.
struct Peo {
    VertexOrder order;
    std::vector<char> simplicial;
};

struct ChordalResult {
    bool chordal = false;
    Peo peo;                            // reverse maximum-cardinality-search order
    std::vector<int> chordless_cycle;   // set when not chordal; length >= 4, no chords
};

// Maximum cardinality search, ties broken by lowest vertex id.
ChordalResult recognize_chordal(const Graph& g);

// Neighbours of v later than v in the order.
std::vector<int> later_neighbours(const Graph& g, const VertexOrder& order, int v);

// Arcs run from later to earlier in the elimination order, so every
// in-neighbourhood is a clique. Empty when g is not chordal or some
// in-neighbourhood exceeds k.
std::optional<Orientation> simplicial_k_orientation(const Graph& g, int k);

// Maximal cliques as bags, glued along the elimination tree. Throws on
// non-chordal input.
TreeDecomposition clique_tree(const Graph& g);

// Every minimal separator (over all nonadjacent pairs) is a clique. n <= 14.
bool minimal_separators_are_cliques(const Graph& g);

// Some chordless cycle of minimum length, or empty when g is chordal.
std::vector<int> shortest_chordless_cycle(const Graph& g);

// Some k-clique with three common neighbours (a W_k subgraph).
bool contains_wk(const Graph& g, int k);

// Chordal supergraph on V(g) with no K_{k+2} (and no W_k when forbid_wk), or
// empty when none exists. Exact branching over chords, n <= 12.
std::optional<Graph> chordal_completion_exact(const Graph& g, int k, bool forbid_wk);

}  // namespace sg
