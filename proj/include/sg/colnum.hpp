#pragma once

#include <optional>

#include "sg/treedecomp.hpp"

namespace sg {

struct ColResult {
    int r = 0;
    int value = 0;
    VertexOrder order;
    std::vector<int> per_vertex;  // |S_r(v)|
};

// Vertices w <= v (in order) reachable from v by a path of length <= r whose
// internal vertices all come strictly after v. Always contains v. Sorted.
VertexSet s_r_set(const Graph& g, const VertexOrder& order, int v, int r);

ColResult col_r_of_order(const Graph& g, const VertexOrder& order, int r);

// Optimum over all orders by a DP over the set of already placed vertices:
// S_r(v) depends only on v and the set of vertices before it. n <= 9.
ColResult col_r_exact(const Graph& g, int r);

// Reverse degeneracy order: exact at r = 1, an upper bound otherwise.
ColResult col_r_heuristic(const Graph& g, int r);

// The clique first, in the given order, then the rest in their old relative order.
VertexOrder prepend_clique(const VertexOrder& order, const VertexSet& clique);

struct BoundCheck {
    int r = 0;
    int value = 0;
    int bound = 0;
    bool ok = false;
};

struct ProductOrder {
    Graph graph;        // (h ⊠ P_m) + K_a; product vertex (x, p) is x*m + p, apex i is h.n()*m + i
    VertexOrder order;  // apex first, then by (rank of x in the decomposition, p)
    int tw = 0;         // width of the decomposition used
    std::vector<BoundCheck> checks;
    bool ok = true;
};

// Checks col_r_of_order against (tw+1)(2r+1) + a for each requested r and
// reports violations in `checks`. Throws InvalidInput when td_h is invalid.
ProductOrder product_order(const Graph& h, const TreeDecomposition& td_h, int m, int a,
                           const std::vector<int>& radii = {1, 2, 3});

struct NablaBound {
    long value = 0;  // 2 * col_{4r+1}
    int col = 0;
    bool exact = false;  // col from col_r_exact rather than an order
};

// Upper bound on the densest r-shallow minor. Uses the exact colouring number
// when n <= 9 and no order is supplied, else the supplied or heuristic order.
NablaBound nabla_upper(const Graph& g, int r, const std::optional<VertexOrder>& order = std::nullopt);

}  // namespace sg
