#pragma once

#include <optional>
#include <string>

#include "sg/generators.hpp"
#include "sg/treedecomp.hpp"

namespace sg {

// Vertex of a rooted universal tree: the root is the empty address and the
// parent of (x_1..x_n) is (x_1..x_{n-1}).
using Address = std::vector<int>;

std::string address_to_string(const Address& a);  // "[1,0,3]"
Address parse_address(const std::string& s);
bool address_less(const Address& a, const Address& b);  // by (length, lexicographic)

// Rooted forest on nodes 0..size-1 with colours and labels.
struct ColouredTree {
    std::vector<int> parent;   // -1 at roots
    std::vector<int> colour;
    std::vector<int> vlabel;   // may be empty (all 0)
    std::vector<int> elabel;   // label of the edge from the parent; may be empty
    std::vector<Address> address;  // may be empty

    int size() const { return static_cast<int>(parent.size()); }
};

// v -> w whenever v is an ancestor of w and c(v) occurs nowhere else on the
// v..w tree path. Throws InvalidInput when parent pointers contain a cycle.
Orientation g_of(const ColouredTree& t);

struct TruncationParams {
    int depth = 1;   // max address length
    int mult = 1;    // children per (colour, label) class
    int labels = 1;  // label alphabet size
};

// Finite portion of the universal treewidth-k graph. Root has colour 0 and
// every node of colour i has `mult` children for each colour j != i and each
// label. Child entry e encodes (colour offset, label, copy) as
// (offset * labels + label) * mult + copy, where offset indexes the colours
// other than the parent's in increasing order.
struct TkTruncation {
    int k = 0;
    TruncationParams params;

    int children_per_node() const { return k * params.labels * params.mult; }
    int colour_of(const Address& a) const;
    int label_of(const Address& a) const;  // 0 at the root
    int child_entry(int parent_colour, int colour, int label, int copy) const;
    bool contains(const Address& a) const;
    // Nodes in the truncation, or -1 when above the guard.
    long long node_count(long long guard) const;
};

struct Truncation {
    Graph graph;          // g_of(tree).base
    ColouredTree tree;    // addresses filled in, BFS order (length, lexicographic)
    Orientation orientation;
};

// Materialized truncation; throws InvalidInput above max_nodes.
Truncation tk_trunc(int k, const TruncationParams& p, long long max_nodes = 2'000'000);

// Rooted truncation of the (k+1)-regular tree with every node having k children
// whose colours differ from each other and from the parent. Addresses use the
// colour of each step, so consecutive entries differ. td bags are closed
// in-neighbourhoods and the td tree is the truncated tree itself.
struct RkTruncation {
    Graph graph;
    ColouredTree tree;
    TreeDecomposition td;
};
RkTruncation rk_trunc(int k, int depth);

// Random tree of spine_size copies of rk_trunc(k, rk_depth), glued along
// cliques of size 1..k-1 drawn from rk bags (size 0 when k = 1).
struct SkTruncation {
    Graph graph;
    TreeDecomposition td;                  // over rk_trunc, adhesion <= k-1
    std::vector<std::vector<int>> copy_of;
    RkTruncation base;
};
SkTruncation sk_trunc(int k, int spine_size, Rng& rng, int rk_depth = 2);

struct SpanningForest {
    std::vector<int> parent;  // -1 at component roots
    std::vector<Edge> arcs;   // the oriented tree edges (parent, child)
};

// Arcs v->w with no x such that v->x->w, as a forest with in-degree <= 1.
// Throws InvalidInput when o is not an acyclic simplicial orientation of g
// or when the certified properties fail.
SpanningForest find_spanning_tree(const Graph& g, const Orientation& o);

struct EmbedFailure {
    int vertex = -1;
    int colour = -1;
    int label = -1;
    std::string hint;
};

struct EmbedResult {
    std::vector<Address> map;   // empty on failure
    std::optional<EmbedFailure> failure;
    int treewidth = -1;
};

// Subgraph embedding of g into the truncation of the universal treewidth-k
// graph. Throws InvalidInput when tw(g) > k; capacity shortfalls are values.
EmbedResult embed_into_tk(const Graph& g, int k, const TruncationParams& p,
                          const std::optional<TreeDecomposition>& td = std::nullopt);

struct EmbeddingViolation {
    std::string kind;  // "size", "range", "injective", "edge", "non_edge"
    int u = -1;
    int v = -1;
    std::string message;
};

// First violation in vertex order, or nothing for a valid (induced) subgraph embedding.
std::optional<EmbeddingViolation> embedding_violation(const Graph& g, const Graph& h, const std::vector<int>& map,
                                                     bool induced);
bool verify_embedding(const Graph& g, const Graph& h, const std::vector<int>& map, bool induced);

// Builds the ancestor closure of the image addresses and checks the map
// against g_of of that closure.
std::optional<EmbeddingViolation> tk_embedding_violation(const Graph& g, const TkTruncation& t,
                                                        const std::vector<Address>& map);
bool verify_tk_embedding(const Graph& g, const TkTruncation& t, const std::vector<Address>& map);

}  // namespace sg
