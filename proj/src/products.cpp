#include "sg/products.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

namespace sg {

Graph product(ProductKind kind, const Graph& a, const Graph& b) {
    int na = a.n(), nb = b.n();
    Graph g(na * nb);
    auto id = [nb](int x, int y) { return x * nb + y; };
    bool cart = kind != ProductKind::direct, direct = kind != ProductKind::cartesian;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            if (cart) {
                for (int y2 : b.nbrs(y))
                    if (y2 > y) g.add_edge(id(x, y), id(x, y2));
                for (int x2 : a.nbrs(x))
                    if (x2 > x) g.add_edge(id(x, y), id(x2, y));
            }
            if (direct)
                for (int x2 : a.nbrs(x))
                    for (int y2 : b.nbrs(y))
                        if (x2 > x) g.add_edge(id(x, y), id(x2, y2));
        }
    return g;
}

bool product_adjacent(ProductKind kind, const Graph& a, const Graph& b, int u, int v) {
    int nb = b.n();
    int x1 = u / nb, y1 = u % nb, x2 = v / nb, y2 = v % nb;
    bool ex = a.has_edge(x1, x2), ey = b.has_edge(y1, y2);
    bool cart = (x1 == x2 && ey) || (y1 == y2 && ex);
    bool direct = ex && ey;
    switch (kind) {
        case ProductKind::cartesian: return cart;
        case ProductKind::direct: return direct;
        case ProductKind::strong: return cart || direct;
    }
    return false;
}

bool strong_adjacent(const Graph& h, const ProductVertex& a, const ProductVertex& b) {
    if (a == b) return false;
    return (a.h == b.h || h.has_edge(a.h, b.h)) && std::abs(a.p - b.p) <= 1;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

void check_partition(int n, const std::vector<VertexSet>& parts) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int covered = 0;
    for (const auto& p : parts) {
        if (p.empty()) throw InvalidInput("partition has an empty part");
        for (int v : p) {
            if (v < 0 || v >= n) throw InvalidInput("partition vertex out of range");
            if (seen[static_cast<size_t>(v)]) throw InvalidInput("partition parts overlap at vertex " + std::to_string(v));
            seen[static_cast<size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != n) throw InvalidInput("partition does not cover every vertex");
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
    check_partition(g.n(), parts);
    std::vector<int> part(static_cast<size_t>(g.n()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) part[static_cast<size_t>(v)] = static_cast<int>(i);
    Graph q(static_cast<int>(parts.size()));
    for (auto [u, v] : g.edges()) {
        int a = part[static_cast<size_t>(u)], b = part[static_cast<size_t>(v)];
        if (a != b) q.add_edge(a, b);
    }
    return q;
}

LayeredPartition make_layered_partition(const Graph& g, std::vector<VertexSet> parts, Layering layering) {
    check_partition(g.n(), parts);
    if (!is_layering(g, layering)) throw InvalidInput("make_layered_partition: not a layering of the graph");
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    for (auto& l : layering.layers) std::sort(l.begin(), l.end());
    auto layer = layering.layer_of(g.n());
    LayeredPartition lp;
    for (const auto& p : parts) {
        std::map<int, int> count;
        for (int v : p) lp.width = std::max(lp.width, ++count[layer[static_cast<size_t>(v)]]);
    }
    lp.parts = std::move(parts);
    lp.layering = std::move(layering);
    return lp;
}

ProductEmbedding partition_to_embedding(const Graph& g, const LayeredPartition& lp) {
    auto check = make_layered_partition(g, lp.parts, lp.layering);
    if (check.width != lp.width) throw InvalidInput("partition_to_embedding: stated width does not match");
    ProductEmbedding e;
    e.h = quotient(g, lp.parts);
    e.m = static_cast<int>(lp.layering.layers.size());
    e.ell = std::max(lp.width, 1);
    int n = g.n();
    auto layer = lp.layering.layer_of(n);
    e.coords.resize(static_cast<size_t>(n));
    e.map.resize(static_cast<size_t>(n));
    for (size_t i = 0; i < lp.parts.size(); ++i) {
        std::map<int, int> next_q;
        for (int v : lp.parts[i]) {
            int p = layer[static_cast<size_t>(v)];
            int q = next_q[p]++;
            e.coords[static_cast<size_t>(v)] = {static_cast<int>(i), p, q};
            e.map[static_cast<size_t>(v)] = (static_cast<int>(i) * e.m + p) * e.ell + q;
        }
    }
    std::set<std::tuple<int, int, int>> hit;
    e.verified = true;
    for (const auto& c : e.coords) e.verified = hit.emplace(c.h, c.p, c.q).second && e.verified;
    for (auto [u, v] : g.edges())
        e.verified = e.verified && strong_adjacent(e.h, e.coords[static_cast<size_t>(u)], e.coords[static_cast<size_t>(v)]);
    return e;
}

PartitionFromEmbedding embedding_to_partition(const Graph& h, int m, int ell, const Graph& g,
                                              const std::vector<ProductVertex>& coords) {
    int n = g.n();
    if (static_cast<int>(coords.size()) != n) throw InvalidInput("embedding_to_partition: map is not total");
    std::map<std::tuple<int, int, int>, int> used;
    for (int v = 0; v < n; ++v) {
        const auto& c = coords[static_cast<size_t>(v)];
        if (c.h < 0 || c.h >= h.n() || c.p < 0 || c.p >= m || c.q < 0 || c.q >= ell)
            throw InvalidInput("embedding_to_partition: coordinate out of range at vertex " + std::to_string(v));
        if (!used.emplace(std::make_tuple(c.h, c.p, c.q), v).second)
            throw InvalidInput("embedding_to_partition: map is not injective at vertex " + std::to_string(v));
    }
    for (auto [u, v] : g.edges())
        if (!strong_adjacent(h, coords[static_cast<size_t>(u)], coords[static_cast<size_t>(v)]))
            throw InvalidInput("embedding_to_partition: edge " + std::to_string(u) + "-" + std::to_string(v) + " is not preserved");
    PartitionFromEmbedding res;
    if (n == 0) return res;
    std::map<int, VertexSet> by_h;
    int pmin = m, pmax = -1;
    for (int v = 0; v < n; ++v) {
        by_h[coords[static_cast<size_t>(v)].h].push_back(v);
        pmin = std::min(pmin, coords[static_cast<size_t>(v)].p);
        pmax = std::max(pmax, coords[static_cast<size_t>(v)].p);
    }
    Layering lay;
    lay.layers.resize(static_cast<size_t>(pmax - pmin + 1));
    for (int v = 0; v < n; ++v) lay.layers[static_cast<size_t>(coords[static_cast<size_t>(v)].p - pmin)].push_back(v);
    std::vector<VertexSet> parts;
    for (auto& [hv, vs] : by_h) parts.push_back(vs);
    res.lp = make_layered_partition(g, parts, lay);
    for (const auto& p : res.lp.parts) res.part_to_h.push_back(coords[static_cast<size_t>(p.front())].h);
    res.m_used = pmax - pmin + 1;
    // The quotient must sit inside h under part_to_h.
    Graph q = quotient(g, res.lp.parts);
    for (auto [a, b] : q.edges())
        if (!h.has_edge(res.part_to_h[static_cast<size_t>(a)], res.part_to_h[static_cast<size_t>(b)]))
            throw std::logic_error("embedding_to_partition: quotient edge missing from h");
    return res;
}

ProductDecomposition layered_product_td(const Graph& g, const std::vector<int>& h_of,
                                        const std::vector<int>& layer_of, const TreeDecomposition& h_td) {
    int n = g.n();
    if (static_cast<int>(h_of.size()) != n || static_cast<int>(layer_of.size()) != n)
        throw InvalidInput("layered_product_td: coordinate vectors must cover every vertex");
    ProductDecomposition best;
    if (n == 0) {
        best.td.bags.push_back({});
        best.td.root = 0;
        return best;
    }
    int hn = 0, lmax = 0;
    for (int v = 0; v < n; ++v) {
        hn = std::max(hn, h_of[static_cast<size_t>(v)] + 1);
        lmax = std::max(lmax, layer_of[static_cast<size_t>(v)]);
        if (layer_of[static_cast<size_t>(v)] < 0) throw InvalidInput("layered_product_td: negative layer");
    }
    for (const auto& b : h_td.bags)
        for (int x : b) hn = std::max(hn, x + 1);
    std::vector<int> layer_size(static_cast<size_t>(lmax) + 1, 0);
    for (int v = 0; v < n; ++v) ++layer_size[static_cast<size_t>(layer_of[static_cast<size_t>(v)])];

    // chunk index of a non-Z layer for a given (s, r); -1 for Z layers
    auto chunk_of = [](int layer, int s, int r) {
        if (layer % s == r % s && layer >= r) return -1;
        return layer < r ? 0 : (layer - r) / s + 1;
    };
    long best_size = -1;
    for (int s = 1; s <= lmax + 2; ++s)
        for (int r = 0; r < s; ++r) {
            long z = 0;
            for (int l = 0; l <= lmax; ++l)
                if (chunk_of(l, s, r) < 0) z += layer_size[static_cast<size_t>(l)];
            std::map<int, std::vector<int>> cnt;  // chunk -> count per H vertex
            for (int v = 0; v < n; ++v) {
                int c = chunk_of(layer_of[static_cast<size_t>(v)], s, r);
                if (c < 0) continue;
                auto& row = cnt[c];
                if (row.empty()) row.assign(static_cast<size_t>(hn), 0);
                ++row[static_cast<size_t>(h_of[static_cast<size_t>(v)])];
            }
            long worst = z;
            for (auto& [c, row] : cnt)
                for (const auto& b : h_td.bags) {
                    long sz = z;
                    for (int x : b) sz += row[static_cast<size_t>(x)];
                    worst = std::max(worst, sz);
                }
            if (best_size < 0 || worst < best_size) {
                best_size = worst;
                best.s = s;
                best.offset = r;
            }
        }

    int s = best.s, r = best.offset;
    VertexSet z;
    std::map<int, std::vector<VertexSet>> members;  // chunk -> vertices per H vertex
    for (int v = 0; v < n; ++v) {
        int c = chunk_of(layer_of[static_cast<size_t>(v)], s, r);
        if (c < 0) {
            z.push_back(v);
            continue;
        }
        auto& row = members[c];
        if (row.empty()) row.resize(static_cast<size_t>(hn));
        row[static_cast<size_t>(h_of[static_cast<size_t>(v)])].push_back(v);
    }
    auto& td = best.td;
    int hnodes = h_td.num_nodes();
    int hroot = h_td.root.value_or(0);
    if (members.empty()) {
        td.bags.push_back(z);
        td.root = 0;
        return best;
    }
    int first_root = -1;
    for (auto& [c, row] : members) {
        int base = td.num_nodes();
        for (int x = 0; x < hnodes; ++x) {
            VertexSet bag = z;
            for (int hv : h_td.bags[static_cast<size_t>(x)]) bag.insert(bag.end(), row[static_cast<size_t>(hv)].begin(), row[static_cast<size_t>(hv)].end());
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(std::move(bag));
        }
        for (auto [x, y] : h_td.edges) td.edges.emplace_back(base + x, base + y);
        if (first_root < 0)
            first_root = base + hroot;
        else
            td.edges.emplace_back(first_root, base + hroot);
    }
    td.root = first_root;
    return best;
}

}  // namespace sg
