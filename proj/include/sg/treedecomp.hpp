#pragma once

#include <optional>
#include <string>

#include "sg/graph.hpp"

namespace sg {

// Nodes are 0..bags.size()-1; edges are undirected tree edges between node ids.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<Edge> edges;
    std::optional<int> root;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int width() const;      // max bag size - 1 (-1 when there are no vertices)
    int adhesion() const;   // max |B_x ∩ B_y| over tree edges
    std::vector<std::vector<int>> adjacency() const;
    // Parent of every node when rooted at r (parent[r] = -1). Requires a tree.
    std::vector<int> parents_from(int r) const;
};

struct TdViolation {
    std::string kind;  // "tree", "vertex_range", "vertex_uncovered", "edge_uncovered", "subtree_disconnected"
    int node = -1;
    int vertex = -1;
    Edge edge{-1, -1};
    std::string message;
};

// First violation found, checking tree shape, then vertex coverage, then
// edge coverage, then per-vertex connectivity.
std::optional<TdViolation> validate(const TreeDecomposition& td, const Graph& g);

struct TreewidthResult {
    int width = -1;
    TreeDecomposition td;
    std::vector<int> elimination_order;
};

// Subset DP over elimination orderings. Exact, n <= 16.
TreewidthResult exact_treewidth(const Graph& g);

// Decomposition induced by eliminating vertices in the given order; bag of
// the node for v is v plus its later neighbours in the filled graph.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order);
// Greedy min-fill elimination; an upper bound for graphs beyond the exact cap.
TreewidthResult heuristic_treewidth(const Graph& g);

// Tree on V(G): node w has bag B_w with B_w \ B_parent(w) = {w}.
struct NormalizedDecomposition {
    TreeDecomposition base;       // node id == vertex id
    std::vector<int> parent;      // -1 at the root
    int root = -1;
    std::vector<int> colour;      // distinct within every bag, values 0..width
    std::vector<int> depth;

    bool is_ancestor(int a, int w) const;  // a is w or above it
};

NormalizedDecomposition normalize(const TreeDecomposition& td, const Graph& g);

struct Torso {
    Graph graph;                 // vertex i of graph is vertices[i]
    std::vector<int> vertices;   // the bag, sorted
};
Torso torso(const TreeDecomposition& td, const Graph& g, int x);

struct Separation {
    VertexSet separator;
    VertexSet side_a;  // both sides include the separator
    VertexSet side_b;
    int node = -1;     // bag used as separator
};
Separation balanced_separation(const Graph& g, const TreeDecomposition& td);

// Identification along a spine edge: parent copy of parent_side[j] is merged
// with child copy of child_side[j].
struct CliquePair {
    std::vector<int> parent_side;
    std::vector<int> child_side;
};

struct GlueResult {
    Graph graph;
    TreeDecomposition td;                    // the spine, bag x = image of copy x
    std::vector<std::vector<int>> copy_of;   // copy_of[x][v] = image of base vertex v in copy x
};

// spine_parent[x] = parent node or -1 for the single root; pairs[x] is used for
// every non-root x. Throws InvalidInput on non-clique lists or adhesion above cap.
GlueResult glue_over(const Graph& base, const std::vector<int>& spine_parent,
                     const std::vector<CliquePair>& pairs, std::optional<int> adhesion_cap = std::nullopt);

// Width at most k and every k-set of vertices lies in at most two bags.
bool k_simple_validate(const TreeDecomposition& td, const Graph& g, int k);

}  // namespace sg
