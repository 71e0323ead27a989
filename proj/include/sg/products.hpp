#pragma once

#include "sg/treedecomp.hpp"

namespace sg {

enum class ProductKind { cartesian, direct, strong };

// Vertex (x, y) of the product is x * b.n() + y.
Graph product(ProductKind kind, const Graph& a, const Graph& b);
// Adjacency in the product without building it.
bool product_adjacent(ProductKind kind, const Graph& a, const Graph& b, int u, int v);
// Vertices of a first, then b shifted by a.n().
Graph join(const Graph& a, const Graph& b);

// Parts must partition V(g); part i becomes vertex i.
Graph quotient(const Graph& g, const std::vector<VertexSet>& parts);
void check_partition(int n, const std::vector<VertexSet>& parts);

struct LayeredPartition {
    std::vector<VertexSet> parts;  // canonical: each sorted, parts ordered by least vertex
    Layering layering;
    int width = 0;                 // max |part ∩ layer|
};

// Canonicalizes the parts and computes the width. Throws InvalidInput when
// the parts do not partition V(g) or the layering is not a layering of g.
LayeredPartition make_layered_partition(const Graph& g, std::vector<VertexSet> parts, Layering layering);

struct ProductVertex {
    int h = 0;  // quotient vertex
    int p = 0;  // path index
    int q = 0;  // clique index
    bool operator==(const ProductVertex&) const = default;
};

struct ProductEmbedding {
    Graph h;                         // the quotient g / P
    int m = 0;                       // path length used
    int ell = 0;                     // clique size
    std::vector<ProductVertex> coords;
    std::vector<int> map;            // ids in (h ⊠ P_m) ⊠ K_ell: (h*m + p)*ell + q
    bool verified = false;
};

// Adjacency in h ⊠ P_m ⊠ K_ell by coordinates.
bool strong_adjacent(const Graph& h, const ProductVertex& a, const ProductVertex& b);

ProductEmbedding partition_to_embedding(const Graph& g, const LayeredPartition& lp);

struct PartitionFromEmbedding {
    LayeredPartition lp;
    std::vector<int> part_to_h;  // quotient part i sits on h-vertex part_to_h[i]
    int m_used = 0;              // number of path positions spanned
};

// Throws InvalidInput unless coords is an injective, edge-preserving map into h ⊠ P_m ⊠ K_ell.
PartitionFromEmbedding embedding_to_partition(const Graph& h, int m, int ell, const Graph& g,
                                              const std::vector<ProductVertex>& coords);

// Decomposition of g ⊆ H ⊠ P given each vertex's H-vertex and layer and a
// decomposition of H. Layers congruent to an offset mod s go into every bag;
// between them, bags are B_x × (chunk layers). s and the offset minimize the
// largest bag.
struct ProductDecomposition {
    TreeDecomposition td;
    int s = 0;
    int offset = 0;
};
ProductDecomposition layered_product_td(const Graph& g, const std::vector<int>& h_of,
                                        const std::vector<int>& layer_of, const TreeDecomposition& h_td);

}  // namespace sg
