#include "sg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace sg {

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(static_cast<size_t>(n)) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& a = adj_[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return n() - 1;
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    auto& a = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return false;
    a.insert(it, v);
    auto& b = adj_[static_cast<size_t>(v)];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return false;
    auto& a = adj_[static_cast<size_t>(u)];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
    auto& b = adj_[static_cast<size_t>(v)];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --m_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : nbrs(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& vs) const {
    std::vector<int> pos(static_cast<size_t>(n()), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i]);
        pos[static_cast<size_t>(vs[i])] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (int w : nbrs(vs[i])) {
            int j = pos[static_cast<size_t>(w)];
            if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
        }
    return h;
}

// ---- Orientation ----

Orientation Orientation::from_arcs(const Graph& g, const std::vector<Edge>& arcs) {
    Orientation o;
    o.base = g;
    o.out.assign(static_cast<size_t>(g.n()), {});
    o.in.assign(static_cast<size_t>(g.n()), {});
    if (arcs.size() != g.m()) throw InvalidInput("orientation: arc count differs from edge count");
    for (auto [u, v] : arcs) {
        if (!g.has_edge(u, v)) throw InvalidInput("orientation: arc is not a base edge");
        o.out[static_cast<size_t>(u)].push_back(v);
        o.in[static_cast<size_t>(v)].push_back(u);
    }
    for (int v = 0; v < g.n(); ++v) {
        auto& a = o.out[static_cast<size_t>(v)];
        auto& b = o.in[static_cast<size_t>(v)];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
    }
    for (int v = 0; v < g.n(); ++v)
        for (int w : o.out[static_cast<size_t>(v)])
            if (o.has_arc(w, v)) throw InvalidInput("orientation: edge directed both ways");
    return o;
}

Orientation Orientation::from_rank(const Graph& g, const std::vector<int>& rank) {
    std::vector<Edge> arcs;
    for (auto [u, v] : g.edges()) {
        if (rank[static_cast<size_t>(u)] < rank[static_cast<size_t>(v)])
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    return from_arcs(g, arcs);
}

bool Orientation::has_arc(int u, int v) const {
    const auto& a = out[static_cast<size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Orientation::is_acyclic() const {
    int n = base.n();
    std::vector<int> indeg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) indeg[static_cast<size_t>(v)] = static_cast<int>(in[static_cast<size_t>(v)].size());
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (int w : out[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(w)] == 0) q.push_back(w);
    }
    return seen == n;
}

std::vector<Edge> Orientation::arcs() const {
    std::vector<Edge> res;
    for (int v = 0; v < base.n(); ++v)
        for (int w : out[static_cast<size_t>(v)]) res.emplace_back(v, w);
    return res;
}

int Orientation::max_in_degree() const {
    int d = 0;
    for (const auto& a : in) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

// ---- VertexOrder / Layering ----

VertexOrder VertexOrder::from_sequence(std::vector<int> seq) {
    VertexOrder o;
    o.rank.assign(seq.size(), -1);
    for (size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= static_cast<int>(seq.size()) || o.rank[static_cast<size_t>(v)] != -1)
            throw InvalidInput("vertex order is not a permutation");
        o.rank[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    o.seq = std::move(seq);
    return o;
}

VertexOrder VertexOrder::identity(int n) {
    std::vector<int> s(static_cast<size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    return from_sequence(std::move(s));
}

VertexOrder VertexOrder::reversed() const {
    return from_sequence(std::vector<int>(seq.rbegin(), seq.rend()));
}

std::vector<int> Layering::layer_of(int n) const {
    std::vector<int> res(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < layers.size(); ++i)
        for (int v : layers[i])
            if (v >= 0 && v < n) res[static_cast<size_t>(v)] = static_cast<int>(i);
    return res;
}

bool is_layering(const Graph& g, const Layering& l) {
    std::vector<int> at(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < l.layers.size(); ++i)
        for (int v : l.layers[i]) {
            if (v < 0 || v >= g.n() || at[static_cast<size_t>(v)] != -1) return false;
            at[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    for (int x : at)
        if (x == -1) return false;
    for (auto [u, v] : g.edges())
        if (std::abs(at[static_cast<size_t>(u)] - at[static_cast<size_t>(v)]) > 1) return false;
    return true;
}

// ---- named families ----

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

namespace {

void need(const std::string& family, const std::vector<int>& p, size_t count, int min_value) {
    if (p.size() != count)
        throw InvalidInput(family + ": expected " + std::to_string(count) + " parameter(s)");
    for (int x : p)
        if (x < min_value) throw InvalidInput(family + ": parameter must be >= " + std::to_string(min_value));
}

}  // namespace

Graph build_named(const std::string& family, const std::vector<int>& p) {
    if (family == "K") {
        need(family, p, 1, 1);
        return complete_graph(p[0]);
    }
    if (family == "Kmn") {
        need(family, p, 2, 1);
        Graph g(p[0] + p[1]);
        for (int u = 0; u < p[0]; ++u)
            for (int v = 0; v < p[1]; ++v) g.add_edge(u, p[0] + v);
        return g;
    }
    if (family == "P") {
        need(family, p, 1, 1);
        return path_graph(p[0]);
    }
    if (family == "C") {
        need(family, p, 1, 3);
        return cycle_graph(p[0]);
    }
    if (family == "grid") {
        need(family, p, 2, 1);
        return grid_graph(p[0], p[1]);
    }
    if (family == "cylinder") {
        need(family, p, 2, 1);
        if (p[0] < 3) throw InvalidInput("cylinder: cycle length must be >= 3");
        int l = p[0], m = p[1];
        Graph g(l * m);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < m; ++j) {
                int v = i * m + j;
                if (j + 1 < m) g.add_edge(v, v + 1);
                g.add_edge(v, ((i + 1) % l) * m + j);
            }
        return g;
    }
    if (family == "W") {
        need(family, p, 1, 1);
        int k = p[0];
        Graph g(3 + k);
        for (int i = 0; i < k; ++i) {
            for (int hub = 0; hub < 3; ++hub) g.add_edge(hub, 3 + i);
            for (int j = i + 1; j < k; ++j) g.add_edge(3 + i, 3 + j);
        }
        return g;
    }
    if (family == "empty") {
        need(family, p, 1, 0);
        return Graph(p[0]);
    }
    if (family == "star") {
        need(family, p, 1, 1);
        Graph g(p[0] + 1);
        for (int v = 1; v <= p[0]; ++v) g.add_edge(0, v);
        return g;
    }
    if (family == "petersen") {
        need(family, p, 0, 0);
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }
    throw InvalidInput("unknown family '" + family + "'");
}

// ---- isomorphism ----

bool is_isomorphic_small(const Graph& a, const Graph& b) {
    check_cap("is_isomorphic_small", std::max(a.n(), b.n()), 10);
    int n = a.n();
    if (n != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return da[static_cast<size_t>(x)] > da[static_cast<size_t>(y)]; });
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);

    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == order.size()) return true;
        int v = order[i];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)] || db[static_cast<size_t>(w)] != da[static_cast<size_t>(v)]) continue;
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                int u = order[j];
                if (a.has_edge(u, v) != b.has_edge(map[static_cast<size_t>(u)], w)) ok = false;
            }
            if (!ok) continue;
            map[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (go(i + 1)) return true;
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    return go(0);
}

// ---- degeneracy ----

Degeneracy degeneracy(const Graph& g) {
    Degeneracy res;
    int n = g.n();
    std::vector<int> deg(static_cast<size_t>(n));
    std::set<std::pair<int, int>> pq;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        pq.insert({deg[static_cast<size_t>(v)], v});
    }
    std::vector<char> gone(static_cast<size_t>(n), 0);
    while (!pq.empty()) {
        auto [d, v] = *pq.begin();
        pq.erase(pq.begin());
        res.value = std::max(res.value, d);
        res.order.push_back(v);
        gone[static_cast<size_t>(v)] = 1;
        for (int w : g.nbrs(v)) {
            if (gone[static_cast<size_t>(w)]) continue;
            pq.erase({deg[static_cast<size_t>(w)], w});
            --deg[static_cast<size_t>(w)];
            pq.insert({deg[static_cast<size_t>(w)], w});
        }
    }
    return res;
}

// ---- BFS helpers ----

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<char> all(static_cast<size_t>(g.n()), 1);
    return bfs_distances_within(g, src, all);
}

std::vector<int> bfs_distances_within(const Graph& g, int src, const std::vector<char>& allowed) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    if (!allowed[static_cast<size_t>(src)]) return dist;
    std::deque<int> q{src};
    dist[static_cast<size_t>(src)] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.nbrs(v))
            if (allowed[static_cast<size_t>(w)] && dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<char>& allowed) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (!allowed[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp{s};
        seen[static_cast<size_t>(s)] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : g.nbrs(comp[i]))
                if (allowed[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return components_within(g, std::vector<char>(static_cast<size_t>(g.n()), 1));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::vector<char> allowed(static_cast<size_t>(g.n()), 0);
    for (int v : vs) allowed[static_cast<size_t>(v)] = 1;
    auto d = bfs_distances_within(g, vs[0], allowed);
    for (int v : vs)
        if (d[static_cast<size_t>(v)] < 0) return false;
    return true;
}

Layering bfs_layering(const Graph& g, const std::vector<int>& roots) {
    if (roots.empty()) throw InvalidInput("bfs_layering: empty root set");
    Layering l;
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    auto run = [&](std::vector<int> start) {
        size_t base = l.layers.size();
        std::vector<int> frontier;
        for (int r : start)
            if (dist[static_cast<size_t>(r)] < 0) {
                dist[static_cast<size_t>(r)] = 0;
                frontier.push_back(r);
            }
        int d = 0;
        while (!frontier.empty()) {
            std::sort(frontier.begin(), frontier.end());
            l.layers.push_back(frontier);
            std::vector<int> next;
            for (int v : frontier)
                for (int w : g.nbrs(v))
                    if (dist[static_cast<size_t>(w)] < 0) {
                        dist[static_cast<size_t>(w)] = d + 1;
                        next.push_back(w);
                    }
            frontier = std::move(next);
            ++d;
        }
        (void)base;
    };
    for (int r : roots)
        if (r < 0 || r >= g.n()) throw InvalidInput("bfs_layering: root out of range");
    run(roots);
    for (int v = 0; v < g.n(); ++v)
        if (dist[static_cast<size_t>(v)] < 0) run({v});
    return l;
}

// ---- minimal separators ----

std::vector<VertexSet> minimal_ab_separators_small(const Graph& g, int a, int b) {
    int n = g.n();
    check_cap("minimal_ab_separators_small", n, 14);
    if (a == b || g.has_edge(a, b)) throw InvalidInput("minimal_ab_separators_small: a and b must be distinct and nonadjacent");
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.nbrs(v)) adj[static_cast<size_t>(v)] |= 1u << w;
    auto reach = [&](int s, uint32_t removed) {
        uint32_t seen = 1u << s, frontier = seen;
        while (frontier) {
            uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1u) next |= adj[static_cast<size_t>(v)];
            next &= ~seen & ~removed;
            seen |= next;
            frontier = next;
        }
        return seen;
    };
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != a && v != b) others.push_back(v);
    std::vector<VertexSet> out;
    for (uint32_t sub = 0; sub < (1u << others.size()); ++sub) {
        uint32_t s = 0;
        for (size_t i = 0; i < others.size(); ++i)
            if (sub >> i & 1u) s |= 1u << others[i];
        uint32_t ca = reach(a, s);
        if (ca >> b & 1u) continue;
        uint32_t cb = reach(b, s);
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v)
            if (s >> v & 1u)
                minimal = (adj[static_cast<size_t>(v)] & ca) && (adj[static_cast<size_t>(v)] & cb);
        if (!minimal) continue;
        VertexSet sep;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1u) sep.push_back(v);
        out.push_back(sep);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- cliques ----

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

namespace {

// Extends cur by vertices of cand (all adjacent to cur) until size t.
bool extend_clique(const Graph& g, std::vector<int>& cur, const std::vector<int>& cand, int t) {
    if (static_cast<int>(cur.size()) == t) return true;
    if (static_cast<int>(cur.size() + cand.size()) < t) return false;
    for (size_t i = 0; i < cand.size(); ++i) {
        int v = cand[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
        cur.push_back(v);
        if (extend_clique(g, cur, next, t)) return true;
        cur.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> find_clique(const Graph& g, int t) {
    if (t <= 0) return {};
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) + 1 < t) continue;
        std::vector<int> cand;
        for (int w : g.nbrs(v))
            if (w > v) cand.push_back(w);
        std::vector<int> cur{v};
        if (extend_clique(g, cur, cand, t)) {
            std::sort(cur.begin(), cur.end());
            return cur;
        }
    }
    return {};
}

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    int best = 1;
    while (!find_clique(g, best + 1).empty()) ++best;
    return best;
}

}  // namespace sg
