#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sg/errors.hpp"

namespace sg {

using VertexSet = std::vector<int>;  // kept sorted wherever it is a set
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    size_t m() const { return m_; }
    const std::vector<int>& nbrs(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(nbrs(v).size()); }
    bool has_edge(int u, int v) const;

    int add_vertex();
    // Returns false if the edge was already present. Loops are rejected.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);

    std::vector<Edge> edges() const;  // u < v, lexicographic
    // Subgraph induced by vs; vertex i of the result is vs[i].
    Graph induced(const std::vector<int>& vs) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
    size_t m_ = 0;
};

// Each base edge gets exactly one direction; acyclicity is checked, not assumed.
struct Orientation {
    Graph base;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    static Orientation from_arcs(const Graph& g, const std::vector<Edge>& arcs);
    // Direct every edge from the lower-rank endpoint to the higher-rank one.
    static Orientation from_rank(const Graph& g, const std::vector<int>& rank);

    bool has_arc(int u, int v) const;
    bool is_acyclic() const;
    std::vector<Edge> arcs() const;
    int max_in_degree() const;
};

// A total order: seq[i] is the vertex at position i, rank[v] its position.
struct VertexOrder {
    std::vector<int> seq;
    std::vector<int> rank;

    static VertexOrder from_sequence(std::vector<int> seq);
    static VertexOrder identity(int n);
    int size() const { return static_cast<int>(seq.size()); }
    VertexOrder reversed() const;
};

struct Layering {
    std::vector<std::vector<int>> layers;

    std::vector<int> layer_of(int n) const;  // -1 for uncovered vertices
};

// Returns true iff layers partition V(g) and every edge spans at most one layer step.
bool is_layering(const Graph& g, const Layering& l);

// Named families with canonical numbering (see README):
//   "K" n; "Kmn" m n; "P" m; "C" l; "grid" l m (vertex r*m+c);
//   "cylinder" l m (cycle position i, path position j -> i*m+j);
//   "W" k (u=0, v=1, w=2, x_i = 3+i); "empty" n; "star" n; "petersen".
Graph build_named(const std::string& family, const std::vector<int>& params);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);

bool is_isomorphic_small(const Graph& a, const Graph& b);

struct Degeneracy {
    int value = 0;
    std::vector<int> order;  // removal order, smallest residual degree first
};
Degeneracy degeneracy(const Graph& g);

// BFS from the root set; leftover components are layered from their minimal
// vertex and appended after the existing layers.
Layering bfs_layering(const Graph& g, const std::vector<int>& roots);

std::vector<VertexSet> minimal_ab_separators_small(const Graph& g, int a, int b);

// Shared helpers.
std::vector<int> bfs_distances(const Graph& g, int src);
// Distances inside the vertex set `allowed` (mask over V(g)); -1 when unreachable.
std::vector<int> bfs_distances_within(const Graph& g, int src, const std::vector<char>& allowed);
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<char>& allowed);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const std::vector<int>& vs);
bool is_clique(const Graph& g, const std::vector<int>& vs);
int clique_number(const Graph& g);
// Some clique of size t, or empty when none exists.
std::vector<int> find_clique(const Graph& g, int t);

}  // namespace sg
