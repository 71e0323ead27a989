#include "sg/colnum.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace sg {

namespace {

// Earlier vertices reachable from v in at most r steps through `later` vertices.
// before(w) tells whether w is earlier than v.
template <class Before>
VertexSet reach(const Graph& g, int v, int r, Before before) {
    VertexSet out{v};
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    dist[static_cast<size_t>(v)] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        int d = dist[static_cast<size_t>(x)];
        if (d == r) continue;
        for (int y : g.nbrs(x)) {
            if (dist[static_cast<size_t>(y)] >= 0) continue;
            dist[static_cast<size_t>(y)] = d + 1;
            if (before(y))
                out.push_back(y);
            else
                q.push(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_order(const Graph& g, const VertexOrder& order) {
    if (order.size() != g.n() || static_cast<int>(order.rank.size()) != g.n())
        throw InvalidInput("vertex order does not cover the graph");
}

}  // namespace

VertexSet s_r_set(const Graph& g, const VertexOrder& order, int v, int r) {
    if (r < 1) throw InvalidInput("s_r_set: r must be at least 1");
    check_order(g, order);
    int rv = order.rank[static_cast<size_t>(v)];
    return reach(g, v, r, [&](int w) { return order.rank[static_cast<size_t>(w)] < rv; });
}

ColResult col_r_of_order(const Graph& g, const VertexOrder& order, int r) {
    check_order(g, order);
    ColResult res;
    res.r = r;
    res.order = order;
    res.per_vertex.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int s = static_cast<int>(s_r_set(g, order, v, r).size());
        res.per_vertex[static_cast<size_t>(v)] = s;
        res.value = std::max(res.value, s);
    }
    return res;
}

ColResult col_r_exact(const Graph& g, int r) {
    int n = g.n();
    check_cap("col_r_exact", n, 9);
    if (r < 1) throw InvalidInput("col_r_exact: r must be at least 1");
    unsigned full = (1u << n) - 1;
    const int inf = n + 1;
    std::vector<int> best(static_cast<size_t>(full) + 1, inf), choice(static_cast<size_t>(full) + 1, -1);
    best[0] = 0;
    for (unsigned placed = 0; placed < full; ++placed) {
        if (best[placed] == inf) continue;
        for (int v = 0; v < n; ++v) {
            if (placed >> v & 1u) continue;
            int cost = static_cast<int>(reach(g, v, r, [&](int w) { return (placed >> w & 1u) != 0; }).size());
            unsigned next = placed | 1u << v;
            int val = std::max(best[placed], cost);
            if (val < best[next]) {
                best[next] = val;
                choice[next] = v;
            }
        }
    }
    std::vector<int> seq;
    for (unsigned s = full; s != 0; s &= ~(1u << choice[s])) seq.push_back(choice[s]);
    std::reverse(seq.begin(), seq.end());
    auto res = col_r_of_order(g, VertexOrder::from_sequence(seq), r);
    if (res.value != best[full]) throw std::logic_error("col_r_exact: reconstructed order disagrees with the table");
    return res;
}

ColResult col_r_heuristic(const Graph& g, int r) {
    auto d = degeneracy(g);
    std::vector<int> seq(d.order.rbegin(), d.order.rend());
    return col_r_of_order(g, VertexOrder::from_sequence(seq), r);
}

VertexOrder prepend_clique(const VertexOrder& order, const VertexSet& clique) {
    std::vector<char> in(order.rank.size(), 0);
    std::vector<int> seq;
    for (int v : clique) {
        if (v < 0 || v >= static_cast<int>(in.size()) || in[static_cast<size_t>(v)])
            throw InvalidInput("prepend_clique: bad or repeated vertex");
        in[static_cast<size_t>(v)] = 1;
        seq.push_back(v);
    }
    for (int v : order.seq)
        if (!in[static_cast<size_t>(v)]) seq.push_back(v);
    return VertexOrder::from_sequence(seq);
}

ProductOrder product_order(const Graph& h, const TreeDecomposition& td_h, int m, int a,
                           const std::vector<int>& radii) {
    if (m < 1 || a < 0) throw InvalidInput("product_order: need m >= 1 and a >= 0");
    if (auto bad = validate(td_h, h)) throw InvalidInput("product_order: " + bad->message);
    ProductOrder res;
    res.tw = td_h.width();
    int hn = h.n();
    auto nd = normalize(td_h, h);
    std::vector<int> hseq(static_cast<size_t>(hn));
    for (int x = 0; x < hn; ++x) hseq[static_cast<size_t>(x)] = x;
    std::stable_sort(hseq.begin(), hseq.end(), [&](int x, int y) {
        return nd.depth[static_cast<size_t>(x)] < nd.depth[static_cast<size_t>(y)];
    });

    int base = hn * m;
    res.graph = Graph(base + a);
    for (int u = 0; u < base; ++u)
        for (int v = u + 1; v < base; ++v) {
            int x1 = u / m, p1 = u % m, x2 = v / m, p2 = v % m;
            if ((x1 == x2 || h.has_edge(x1, x2)) && std::abs(p1 - p2) <= 1) res.graph.add_edge(u, v);
        }
    for (int i = 0; i < a; ++i)
        for (int v = 0; v < base + a; ++v)
            if (v != base + i) res.graph.add_edge(base + i, v);

    std::vector<int> seq;
    for (int i = 0; i < a; ++i) seq.push_back(base + i);
    for (int x : hseq)
        for (int p = 0; p < m; ++p) seq.push_back(x * m + p);
    res.order = VertexOrder::from_sequence(seq);

    for (int r : radii) {
        BoundCheck c;
        c.r = r;
        c.value = col_r_of_order(res.graph, res.order, r).value;
        c.bound = (res.tw + 1) * (2 * r + 1) + a;
        c.ok = c.value <= c.bound;
        res.ok = res.ok && c.ok;
        res.checks.push_back(c);
    }
    return res;
}

NablaBound nabla_upper(const Graph& g, int r, const std::optional<VertexOrder>& order) {
    int radius = 4 * r + 1;
    NablaBound b;
    if (order) {
        b.col = col_r_of_order(g, *order, radius).value;
    } else if (g.n() <= 9) {
        b.col = col_r_exact(g, radius).value;
        b.exact = true;
    } else {
        b.col = col_r_heuristic(g, radius).value;
    }
    b.value = 2L * b.col;
    return b;
}

}  // namespace sg
