#include "sg/treedecomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace sg {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int TreeDecomposition::adhesion() const {
    int a = 0;
    for (auto [x, y] : edges) {
        VertexSet s1 = bags[static_cast<size_t>(x)], s2 = bags[static_cast<size_t>(y)], out;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(out));
        a = std::max(a, static_cast<int>(out.size()));
    }
    return a;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [x, y] : edges) {
        adj[static_cast<size_t>(x)].push_back(y);
        adj[static_cast<size_t>(y)].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> TreeDecomposition::parents_from(int r) const {
    auto adj = adjacency();
    std::vector<int> parent(bags.size(), -2);
    parent[static_cast<size_t>(r)] = -1;
    std::deque<int> q{r};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[static_cast<size_t>(x)])
            if (parent[static_cast<size_t>(y)] == -2) {
                parent[static_cast<size_t>(y)] = x;
                q.push_back(y);
            }
    }
    return parent;
}

// ---- validation ----

std::optional<TdViolation> validate(const TreeDecomposition& td, const Graph& g) {
    int nn = td.num_nodes(), n = g.n();
    auto fail = [](std::string kind, std::string msg) {
        TdViolation v;
        v.kind = std::move(kind);
        v.message = std::move(msg);
        return v;
    };
    if (nn == 0) {
        if (n == 0) return std::nullopt;
        return fail("tree", "decomposition has no nodes");
    }
    if (static_cast<int>(td.edges.size()) != nn - 1)
        return fail("tree", "tree with " + std::to_string(nn) + " nodes needs " + std::to_string(nn - 1) + " edges");
    for (auto [x, y] : td.edges)
        if (x < 0 || y < 0 || x >= nn || y >= nn || x == y) {
            auto v = fail("tree", "bad tree edge");
            v.edge = {x, y};
            return v;
        }
    if (td.root && (*td.root < 0 || *td.root >= nn)) return fail("tree", "root out of range");
    auto par = td.parents_from(0);
    for (int x = 0; x < nn; ++x)
        if (par[static_cast<size_t>(x)] == -2) {
            auto v = fail("tree", "tree is disconnected");
            v.node = x;
            return v;
        }

    std::vector<std::vector<int>> nodes_of(static_cast<size_t>(n));
    std::vector<VertexSet> sorted(td.bags);
    for (int x = 0; x < nn; ++x) {
        auto& b = sorted[static_cast<size_t>(x)];
        std::sort(b.begin(), b.end());
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= n || (i && b[i] == b[i - 1])) {
                auto v = fail("vertex_range", "bag entry out of range or repeated");
                v.node = x;
                v.vertex = b[i];
                return v;
            }
            nodes_of[static_cast<size_t>(b[i])].push_back(x);
        }
    }
    for (int v = 0; v < n; ++v)
        if (nodes_of[static_cast<size_t>(v)].empty()) {
            auto r = fail("vertex_uncovered", "vertex " + std::to_string(v) + " is in no bag");
            r.vertex = v;
            return r;
        }
    for (auto [u, v] : g.edges()) {
        const auto& a = nodes_of[static_cast<size_t>(u)].size() <= nodes_of[static_cast<size_t>(v)].size()
                            ? nodes_of[static_cast<size_t>(u)] : nodes_of[static_cast<size_t>(v)];
        int other = &a == &nodes_of[static_cast<size_t>(u)] ? v : u;
        bool ok = false;
        for (int x : a) {
            const auto& b = sorted[static_cast<size_t>(x)];
            if (std::binary_search(b.begin(), b.end(), other)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            auto r = fail("edge_uncovered", "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
            r.edge = {u, v};
            return r;
        }
    }
    // A vertex's nodes span a subtree iff they carry exactly (count - 1) tree edges.
    std::vector<int> inner(static_cast<size_t>(n), 0);
    for (auto [x, y] : td.edges) {
        const auto& bx = sorted[static_cast<size_t>(x)];
        const auto& by = sorted[static_cast<size_t>(y)];
        std::vector<int> common;
        std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(common));
        for (int v : common) ++inner[static_cast<size_t>(v)];
    }
    for (int v = 0; v < n; ++v)
        if (inner[static_cast<size_t>(v)] != static_cast<int>(nodes_of[static_cast<size_t>(v)].size()) - 1) {
            auto r = fail("subtree_disconnected", "bags containing vertex " + std::to_string(v) + " are not connected");
            r.vertex = v;
            r.node = nodes_of[static_cast<size_t>(v)].front();
            return r;
        }
    return std::nullopt;
}

// ---- exact treewidth ----

TreewidthResult exact_treewidth(const Graph& g) {
    int n = g.n();
    check_cap("exact_treewidth", n, 16);
    TreewidthResult res;
    if (n == 0) {
        res.td.bags.push_back({});
        res.td.root = 0;
        return res;
    }
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.nbrs(v)) adj[static_cast<size_t>(v)] |= 1u << w;

    // q(S, v): vertices outside S ∪ {v} reachable from v through S.
    auto q = [&](uint32_t s, int v) {
        uint32_t reach = adj[static_cast<size_t>(v)] & s, frontier = reach;
        while (frontier) {
            uint32_t next = 0;
            for (uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<size_t>(__builtin_ctz(f))];
            next &= s & ~reach;
            reach |= next;
            frontier = next;
        }
        uint32_t out = adj[static_cast<size_t>(v)];
        for (uint32_t f = reach; f; f &= f - 1) out |= adj[static_cast<size_t>(__builtin_ctz(f))];
        out &= ~s & ~(1u << v);
        return __builtin_popcount(out);
    };

    uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<int8_t> tw(static_cast<size_t>(full) + 1, 0);
    std::vector<uint8_t> choice(static_cast<size_t>(full) + 1, 0);
    tw[0] = -1;
    for (uint32_t s = 1; s <= full; ++s) {
        int best = 127, pick = -1;
        for (uint32_t f = s; f; f &= f - 1) {
            int v = __builtin_ctz(f);
            uint32_t rest = s & ~(1u << v);
            int cand = std::max<int>(tw[rest], q(rest, v));
            if (cand < best) {
                best = cand;
                pick = v;
            }
        }
        tw[s] = static_cast<int8_t>(best);
        choice[s] = static_cast<uint8_t>(pick);
    }
    std::vector<int> order;
    for (uint32_t s = full; s; s &= ~(1u << choice[s])) order.push_back(choice[s]);
    std::reverse(order.begin(), order.end());
    res.width = tw[full];
    res.elimination_order = order;
    res.td = td_from_elimination(g, order);
    return res;
}

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        td.root = 0;
        return td;
    }
    auto ord = VertexOrder::from_sequence(order);
    std::vector<std::set<int>> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)].insert(g.nbrs(v).begin(), g.nbrs(v).end());
    td.bags.resize(static_cast<size_t>(n));
    std::vector<int> roots;
    for (int v : order) {
        std::vector<int> later;
        for (int w : adj[static_cast<size_t>(v)])
            if (ord.rank[static_cast<size_t>(w)] > ord.rank[static_cast<size_t>(v)]) later.push_back(w);
        for (size_t i = 0; i < later.size(); ++i)
            for (size_t j = i + 1; j < later.size(); ++j) {
                adj[static_cast<size_t>(later[i])].insert(later[j]);
                adj[static_cast<size_t>(later[j])].insert(later[i]);
            }
        VertexSet bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[static_cast<size_t>(v)] = bag;
        if (later.empty()) {
            roots.push_back(v);
        } else {
            int p = *std::min_element(later.begin(), later.end(), [&](int a, int b) {
                return ord.rank[static_cast<size_t>(a)] < ord.rank[static_cast<size_t>(b)];
            });
            td.edges.emplace_back(std::min(v, p), std::max(v, p));
        }
    }
    int top = order.back();
    for (int r : roots)
        if (r != top) td.edges.emplace_back(std::min(r, top), std::max(r, top));
    std::sort(td.edges.begin(), td.edges.end());
    td.root = top;
    return td;
}

TreewidthResult heuristic_treewidth(const Graph& g) {
    int n = g.n();
    std::vector<std::set<int>> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)].insert(g.nbrs(v).begin(), g.nbrs(v).end());
    std::vector<char> gone(static_cast<size_t>(n), 0);
    std::vector<int> order;
    auto fill_of = [&](int v) {
        long f = 0;
        const auto& a = adj[static_cast<size_t>(v)];
        for (auto i = a.begin(); i != a.end(); ++i)
            for (auto j = std::next(i); j != a.end(); ++j)
                if (!adj[static_cast<size_t>(*i)].count(*j)) ++f;
        return f;
    };
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        long pf = 0;
        size_t pd = 0;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<size_t>(v)]) continue;
            long f = fill_of(v);
            size_t d = adj[static_cast<size_t>(v)].size();
            if (pick < 0 || f < pf || (f == pf && d < pd)) pick = v, pf = f, pd = d;
        }
        const auto nb = adj[static_cast<size_t>(pick)];
        for (int a : nb) {
            adj[static_cast<size_t>(a)].erase(pick);
            for (int b : nb)
                if (a != b) adj[static_cast<size_t>(a)].insert(b);
        }
        gone[static_cast<size_t>(pick)] = 1;
        order.push_back(pick);
    }
    TreewidthResult res;
    res.elimination_order = order;
    res.td = td_from_elimination(g, order);
    res.width = res.td.width();
    return res;
}

// ---- normalization ----

bool NormalizedDecomposition::is_ancestor(int a, int w) const {
    while (w >= 0) {
        if (w == a) return true;
        w = parent[static_cast<size_t>(w)];
    }
    return false;
}

NormalizedDecomposition normalize(const TreeDecomposition& td, const Graph& g) {
    if (auto v = validate(td, g)) throw InvalidInput("normalize: invalid decomposition: " + v->message);
    int n = g.n();
    NormalizedDecomposition nd;
    if (n == 0) return nd;

    int r0 = td.root.value_or(0);
    if (td.bags[static_cast<size_t>(r0)].empty())
        for (int x = 0; x < td.num_nodes(); ++x)
            if (!td.bags[static_cast<size_t>(x)].empty()) {
                r0 = x;
                break;
            }
    auto tpar = td.parents_from(r0);
    auto tadj = td.adjacency();

    nd.parent.assign(static_cast<size_t>(n), -1);
    nd.base.bags.assign(static_cast<size_t>(n), {});
    std::vector<int> attach(static_cast<size_t>(td.num_nodes()), -1);
    std::deque<int> q{r0};
    std::vector<char> seen(static_cast<size_t>(td.num_nodes()), 0);
    seen[static_cast<size_t>(r0)] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        int p = tpar[static_cast<size_t>(x)];
        VertexSet bx = td.bags[static_cast<size_t>(x)];
        std::sort(bx.begin(), bx.end());
        VertexSet fresh;
        if (p < 0) {
            fresh = bx;
        } else {
            VertexSet bp = td.bags[static_cast<size_t>(p)];
            std::sort(bp.begin(), bp.end());
            std::set_difference(bx.begin(), bx.end(), bp.begin(), bp.end(), std::back_inserter(fresh));
        }
        int above = p < 0 ? -1 : attach[static_cast<size_t>(p)];
        if (fresh.empty()) {
            attach[static_cast<size_t>(x)] = above;
        } else {
            // Chain w_1..w_t; bag of w_i drops w_{i+1..t} from B_x.
            for (size_t i = 0; i < fresh.size(); ++i) {
                int w = fresh[i];
                nd.parent[static_cast<size_t>(w)] = i == 0 ? above : fresh[i - 1];
                VertexSet bag;
                for (int u : bx)
                    if (!std::binary_search(fresh.begin() + static_cast<long>(i) + 1, fresh.end(), u)) bag.push_back(u);
                nd.base.bags[static_cast<size_t>(w)] = bag;
            }
            attach[static_cast<size_t>(x)] = fresh.back();
        }
        for (int y : tadj[static_cast<size_t>(x)])
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                q.push_back(y);
            }
    }

    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) {
        int p = nd.parent[static_cast<size_t>(w)];
        if (p < 0) {
            nd.root = w;
        } else {
            children[static_cast<size_t>(p)].push_back(w);
            nd.base.edges.emplace_back(std::min(p, w), std::max(p, w));
        }
    }
    std::sort(nd.base.edges.begin(), nd.base.edges.end());
    nd.base.root = nd.root;

    nd.colour.assign(static_cast<size_t>(n), -1);
    nd.depth.assign(static_cast<size_t>(n), 0);
    std::deque<int> bq{nd.root};
    while (!bq.empty()) {
        int w = bq.front();
        bq.pop_front();
        const auto& bag = nd.base.bags[static_cast<size_t>(w)];
        std::vector<char> used(bag.size() + 1, 0);
        for (int u : bag)
            if (u != w) {
                int c = nd.colour[static_cast<size_t>(u)];
                if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<size_t>(c)] = 1;
            }
        int c = 0;
        while (used[static_cast<size_t>(c)]) ++c;
        nd.colour[static_cast<size_t>(w)] = c;
        for (int ch : children[static_cast<size_t>(w)]) {
            nd.depth[static_cast<size_t>(ch)] = nd.depth[static_cast<size_t>(w)] + 1;
            bq.push_back(ch);
        }
    }
    return nd;
}

// ---- torso ----

Torso torso(const TreeDecomposition& td, const Graph& g, int x) {
    if (x < 0 || x >= td.num_nodes()) throw InvalidInput("torso: unknown node " + std::to_string(x));
    Torso t;
    t.vertices = td.bags[static_cast<size_t>(x)];
    std::sort(t.vertices.begin(), t.vertices.end());
    t.graph = g.induced(t.vertices);
    auto pos = [&](int v) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) - t.vertices.begin());
    };
    auto tadj = td.adjacency();
    for (int y : tadj[static_cast<size_t>(x)]) {
        std::vector<int> common;
        for (int v : td.bags[static_cast<size_t>(y)])
            if (std::binary_search(t.vertices.begin(), t.vertices.end(), v)) common.push_back(pos(v));
        for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j) t.graph.add_edge(common[i], common[j]);
    }
    return t;
}

// ---- balanced separation ----

Separation balanced_separation(const Graph& g, const TreeDecomposition& td) {
    if (auto v = validate(td, g)) throw InvalidInput("balanced_separation: invalid decomposition: " + v->message);
    int n = g.n(), nn = td.num_nodes();
    Separation sep;
    if (n == 0) return sep;
    int r = td.root.value_or(0);
    auto par = td.parents_from(r);
    auto tadj = td.adjacency();
    std::vector<int> bfs{r}, depth(static_cast<size_t>(nn), 0);
    for (size_t i = 0; i < bfs.size(); ++i)
        for (int y : tadj[static_cast<size_t>(bfs[i])])
            if (y != par[static_cast<size_t>(bfs[i])]) {
                depth[static_cast<size_t>(y)] = depth[static_cast<size_t>(bfs[i])] + 1;
                bfs.push_back(y);
            }
    std::vector<int> top(static_cast<size_t>(n), -1);
    for (int x : bfs)
        for (int v : td.bags[static_cast<size_t>(x)])
            if (top[static_cast<size_t>(v)] < 0) top[static_cast<size_t>(v)] = x;
    std::vector<long> sub(static_cast<size_t>(nn), 0);
    for (int v = 0; v < n; ++v) ++sub[static_cast<size_t>(top[static_cast<size_t>(v)])];
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
        if (par[static_cast<size_t>(*it)] >= 0) sub[static_cast<size_t>(par[static_cast<size_t>(*it)])] += sub[static_cast<size_t>(*it)];

    int x = r;
    for (bool moved = true; moved;) {
        moved = false;
        for (int y : tadj[static_cast<size_t>(x)])
            if (y != par[static_cast<size_t>(x)] && 2 * sub[static_cast<size_t>(y)] > n) {
                x = y;
                moved = true;
                break;
            }
    }
    sep.node = x;
    sep.separator = td.bags[static_cast<size_t>(x)];
    std::sort(sep.separator.begin(), sep.separator.end());

    // Component of T - x containing each node, named by x's neighbour.
    std::vector<int> comp(static_cast<size_t>(nn), -1);
    for (int y : tadj[static_cast<size_t>(x)]) {
        std::vector<int> st{y};
        comp[static_cast<size_t>(y)] = y;
        while (!st.empty()) {
            int z = st.back();
            st.pop_back();
            for (int w : tadj[static_cast<size_t>(z)])
                if (w != x && comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = y;
                    st.push_back(w);
                }
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(sep.separator.begin(), sep.separator.end(), v))
            groups[comp[static_cast<size_t>(top[static_cast<size_t>(v)])]].push_back(v);
    std::vector<std::vector<int>> items;
    for (auto& [k, vs] : groups) items.push_back(std::move(vs));
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    std::vector<int> a, b;
    if (!items.empty() && 3 * items[0].size() >= static_cast<size_t>(n)) {
        a = items[0];
        for (size_t i = 1; i < items.size(); ++i) b.insert(b.end(), items[i].begin(), items[i].end());
    } else {
        for (auto& it : items) {
            auto& dst = 3 * a.size() < static_cast<size_t>(n) ? a : b;
            dst.insert(dst.end(), it.begin(), it.end());
        }
    }
    a.insert(a.end(), sep.separator.begin(), sep.separator.end());
    b.insert(b.end(), sep.separator.begin(), sep.separator.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    sep.side_a = std::move(a);
    sep.side_b = std::move(b);
    return sep;
}

// ---- gluing ----

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

GlueResult glue_over(const Graph& base, const std::vector<int>& spine_parent,
                     const std::vector<CliquePair>& pairs, std::optional<int> adhesion_cap) {
    int nn = static_cast<int>(spine_parent.size()), nb = base.n();
    if (nn == 0) throw InvalidInput("glue_over: empty spine");
    if (static_cast<int>(pairs.size()) != nn) throw InvalidInput("glue_over: need one clique pair entry per spine node");
    int root = -1;
    for (int x = 0; x < nn; ++x) {
        int p = spine_parent[static_cast<size_t>(x)];
        if (p == -1) {
            if (root >= 0) throw InvalidInput("glue_over: spine has two roots");
            root = x;
        } else if (p < 0 || p >= nn || p == x) {
            throw InvalidInput("glue_over: bad spine parent");
        }
    }
    if (root < 0) throw InvalidInput("glue_over: spine has no root");
    for (int x = 0; x < nn; ++x) {
        int steps = 0;
        for (int y = x; y != -1; y = spine_parent[static_cast<size_t>(y)])
            if (++steps > nn) throw InvalidInput("glue_over: spine has a cycle");
    }
    Dsu dsu(static_cast<size_t>(nn) * static_cast<size_t>(nb));
    for (int x = 0; x < nn; ++x) {
        if (x == root) continue;
        const auto& cp = pairs[static_cast<size_t>(x)];
        if (cp.parent_side.size() != cp.child_side.size()) throw InvalidInput("glue_over: clique lists differ in length");
        if (adhesion_cap && static_cast<int>(cp.parent_side.size()) > *adhesion_cap)
            throw InvalidInput("glue_over: identification of size " + std::to_string(cp.parent_side.size()) + " exceeds adhesion cap");
        for (const auto* side : {&cp.parent_side, &cp.child_side}) {
            std::set<int> distinct(side->begin(), side->end());
            if (distinct.size() != side->size()) throw InvalidInput("glue_over: repeated vertex in clique list");
            for (int v : *side)
                if (v < 0 || v >= nb) throw InvalidInput("glue_over: clique vertex out of range");
            if (!is_clique(base, *side)) throw InvalidInput("glue_over: identification list is not a clique");
        }
        int p = spine_parent[static_cast<size_t>(x)];
        for (size_t j = 0; j < cp.parent_side.size(); ++j)
            dsu.unite(p * nb + cp.parent_side[j], x * nb + cp.child_side[j]);
    }
    GlueResult res;
    std::vector<int> label(static_cast<size_t>(nn) * static_cast<size_t>(nb), -1);
    int next = 0;
    res.copy_of.assign(static_cast<size_t>(nn), std::vector<int>(static_cast<size_t>(nb)));
    for (int x = 0; x < nn; ++x)
        for (int v = 0; v < nb; ++v) {
            int c = dsu.find(x * nb + v);
            if (label[static_cast<size_t>(c)] < 0) label[static_cast<size_t>(c)] = next++;
            res.copy_of[static_cast<size_t>(x)][static_cast<size_t>(v)] = label[static_cast<size_t>(c)];
        }
    res.graph = Graph(next);
    for (int x = 0; x < nn; ++x) {
        const auto& img = res.copy_of[static_cast<size_t>(x)];
        for (auto [u, v] : base.edges()) res.graph.add_edge(img[static_cast<size_t>(u)], img[static_cast<size_t>(v)]);
        VertexSet bag(img.begin(), img.end());
        std::sort(bag.begin(), bag.end());
        res.td.bags.push_back(bag);
        int p = spine_parent[static_cast<size_t>(x)];
        if (p >= 0) res.td.edges.emplace_back(std::min(p, x), std::max(p, x));
    }
    std::sort(res.td.edges.begin(), res.td.edges.end());
    res.td.root = root;
    return res;
}

// ---- k-simplicity ----

bool k_simple_validate(const TreeDecomposition& td, const Graph& g, int k) {
    if (k < 0 || td.width() > k || validate(td, g)) return false;
    std::map<std::vector<int>, int> count;
    for (const auto& b0 : td.bags) {
        VertexSet b = b0;
        std::sort(b.begin(), b.end());
        int s = static_cast<int>(b.size());
        if (s < k) continue;
        std::vector<char> pick(static_cast<size_t>(s), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            std::vector<int> sub;
            for (int i = 0; i < s; ++i)
                if (pick[static_cast<size_t>(i)]) sub.push_back(b[static_cast<size_t>(i)]);
            if (++count[sub] > 2) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return true;
}

}  // namespace sg
