#include "sg/chordal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace sg {

namespace {

// Shortest x-y path using only vertices marked in allowed; empty if none.
std::vector<int> shortest_path_within(const Graph& g, int x, int y, const std::vector<char>& allowed) {
    std::vector<int> prev(static_cast<size_t>(g.n()), -2);
    prev[static_cast<size_t>(x)] = -1;
    std::deque<int> q{x};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == y) break;
        for (int w : g.nbrs(v))
            if (allowed[static_cast<size_t>(w)] && prev[static_cast<size_t>(w)] == -2) {
                prev[static_cast<size_t>(w)] = v;
                q.push_back(w);
            }
    }
    if (prev[static_cast<size_t>(y)] == -2) return {};
    std::vector<int> path;
    for (int v = y; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Cycle v, x, ..., y through G - (N[v] \ {x, y}); chordless by construction.
std::vector<int> cycle_through(const Graph& g, int v, int x, int y) {
    std::vector<char> allowed(static_cast<size_t>(g.n()), 1);
    allowed[static_cast<size_t>(v)] = 0;
    for (int w : g.nbrs(v))
        if (w != x && w != y) allowed[static_cast<size_t>(w)] = 0;
    auto path = shortest_path_within(g, x, y, allowed);
    if (path.empty()) return {};
    path.insert(path.begin(), v);
    return path;
}

}  // namespace

std::vector<int> later_neighbours(const Graph& g, const VertexOrder& order, int v) {
    std::vector<int> out;
    for (int w : g.nbrs(v))
        if (order.rank[static_cast<size_t>(w)] > order.rank[static_cast<size_t>(v)]) out.push_back(w);
    return out;
}

ChordalResult recognize_chordal(const Graph& g) {
    int n = g.n();
    // MCS with buckets keyed by visited-neighbour count; std::set gives lowest id on ties.
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<std::set<int>> bucket(static_cast<size_t>(n) + 1);
    for (int v = 0; v < n; ++v) bucket[0].insert(v);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> visit;
    int top = 0;
    for (int step = 0; step < n; ++step) {
        while (top > 0 && bucket[static_cast<size_t>(top)].empty()) --top;
        int v = *bucket[static_cast<size_t>(top)].begin();
        bucket[static_cast<size_t>(top)].erase(bucket[static_cast<size_t>(top)].begin());
        visited[static_cast<size_t>(v)] = 1;
        visit.push_back(v);
        for (int w : g.nbrs(v)) {
            if (visited[static_cast<size_t>(w)]) continue;
            int& wt = weight[static_cast<size_t>(w)];
            bucket[static_cast<size_t>(wt)].erase(w);
            ++wt;
            bucket[static_cast<size_t>(wt)].insert(w);
            top = std::max(top, wt);
        }
    }
    ChordalResult res;
    res.peo.order = VertexOrder::from_sequence(std::vector<int>(visit.rbegin(), visit.rend()));
    const auto& ord = res.peo.order;
    res.peo.simplicial.assign(static_cast<size_t>(n), 1);
    res.chordal = true;
    int bad_v = -1, bad_x = -1, bad_y = -1;
    for (int v = 0; v < n; ++v) {
        auto later = later_neighbours(g, ord, v);
        for (size_t i = 0; i < later.size() && res.peo.simplicial[static_cast<size_t>(v)]; ++i)
            for (size_t j = i + 1; j < later.size(); ++j)
                if (!g.has_edge(later[i], later[j])) {
                    res.peo.simplicial[static_cast<size_t>(v)] = 0;
                    if (bad_v < 0) bad_v = v, bad_x = later[i], bad_y = later[j];
                    break;
                }
        if (!res.peo.simplicial[static_cast<size_t>(v)]) res.chordal = false;
    }
    if (!res.chordal) {
        res.chordless_cycle = cycle_through(g, bad_v, bad_x, bad_y);
        if (res.chordless_cycle.empty()) res.chordless_cycle = shortest_chordless_cycle(g);
    }
    return res;
}

std::vector<int> shortest_chordless_cycle(const Graph& g) {
    std::vector<int> best;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.nbrs(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                auto c = cycle_through(g, v, nb[i], nb[j]);
                if (!c.empty() && (best.empty() || c.size() < best.size())) best = c;
                if (best.size() == 4) return best;
            }
    }
    return best;
}

std::optional<Orientation> simplicial_k_orientation(const Graph& g, int k) {
    auto r = recognize_chordal(g);
    if (!r.chordal) return std::nullopt;
    int n = g.n();
    std::vector<int> rank(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) rank[static_cast<size_t>(v)] = n - 1 - r.peo.order.rank[static_cast<size_t>(v)];
    auto o = Orientation::from_rank(g, rank);
    if (o.max_in_degree() > k) return std::nullopt;
    return o;
}

TreeDecomposition clique_tree(const Graph& g) {
    auto r = recognize_chordal(g);
    if (!r.chordal) throw InvalidInput("clique_tree: graph is not chordal");
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        td.root = 0;
        return td;
    }
    const auto& ord = r.peo.order;
    std::vector<std::vector<int>> later(static_cast<size_t>(n));
    std::vector<int> parent(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        later[static_cast<size_t>(v)] = later_neighbours(g, ord, v);
        if (!later[static_cast<size_t>(v)].empty())
            parent[static_cast<size_t>(v)] = *std::min_element(
                later[static_cast<size_t>(v)].begin(), later[static_cast<size_t>(v)].end(),
                [&](int a, int b) { return ord.rank[static_cast<size_t>(a)] < ord.rank[static_cast<size_t>(b)]; });
    }
    // C_u = {u} ∪ later(u) is non-maximal iff some w with parent u has
    // |later(w)| = |later(u)| + 1; then C_u ⊂ C_w and u merges into w.
    std::vector<int> rep(static_cast<size_t>(n), -1);
    for (int v : ord.seq) {
        if (rep[static_cast<size_t>(v)] < 0) rep[static_cast<size_t>(v)] = v;
        int p = parent[static_cast<size_t>(v)];
        if (p >= 0 && rep[static_cast<size_t>(p)] < 0 &&
            later[static_cast<size_t>(v)].size() == later[static_cast<size_t>(p)].size() + 1)
            rep[static_cast<size_t>(p)] = rep[static_cast<size_t>(v)];
    }
    std::vector<int> node_of(static_cast<size_t>(n), -1);
    for (int v : ord.seq)
        if (rep[static_cast<size_t>(v)] == v) {
            node_of[static_cast<size_t>(v)] = td.num_nodes();
            VertexSet bag = later[static_cast<size_t>(v)];
            bag.push_back(v);
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(bag);
        }
    std::set<Edge> edges;
    std::vector<int> roots;
    for (int v : ord.seq) {
        int a = node_of[static_cast<size_t>(rep[static_cast<size_t>(v)])];
        int p = parent[static_cast<size_t>(v)];
        if (p < 0) {
            roots.push_back(a);
            continue;
        }
        int b = node_of[static_cast<size_t>(rep[static_cast<size_t>(p)])];
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
    int root = roots.back();
    for (int x : roots)
        if (x != root) edges.insert({std::min(x, root), std::max(x, root)});
    td.edges.assign(edges.begin(), edges.end());
    td.root = root;
    return td;
}

bool minimal_separators_are_cliques(const Graph& g) {
    int n = g.n();
    check_cap("minimal_separators_are_cliques", n, 14);
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.nbrs(v)) adj[static_cast<size_t>(v)] |= 1u << w;
    uint32_t full = (1u << n) - 1;
    // S is a minimal separator iff G - S has at least two components whose
    // neighbourhood is all of S.
    for (uint32_t s = 0; s < full; ++s) {
        uint32_t rest = full & ~s, seen = 0;
        int full_comps = 0;
        for (uint32_t f = rest; f; f &= f - 1) {
            int start = __builtin_ctz(f);
            if (seen >> start & 1u) continue;
            uint32_t comp = 1u << start, frontier = comp;
            while (frontier) {
                uint32_t next = 0;
                for (uint32_t h = frontier; h; h &= h - 1) next |= adj[static_cast<size_t>(__builtin_ctz(h))];
                next &= rest & ~comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            uint32_t nb = 0;
            for (uint32_t h = comp; h; h &= h - 1) nb |= adj[static_cast<size_t>(__builtin_ctz(h))];
            if ((nb & s) == s) ++full_comps;
        }
        if (full_comps < 2) continue;
        for (uint32_t a = s; a; a &= a - 1) {
            int u = __builtin_ctz(a);
            if ((adj[static_cast<size_t>(u)] & s) != (s & ~(1u << u))) return false;
        }
    }
    return true;
}

bool contains_wk(const Graph& g, int k) {
    int n = g.n();
    if (k <= 0) return n >= 3;
    std::vector<int> cur;
    // Enumerate k-cliques in increasing vertex order and count common neighbours.
    auto rec = [&](auto&& self, const std::vector<int>& cand) -> bool {
        if (static_cast<int>(cur.size()) == k) {
            int common = 0;
            for (int w = 0; w < n; ++w) {
                bool all = true;
                for (int u : cur)
                    if (!g.has_edge(u, w)) {
                        all = false;
                        break;
                    }
                if (all && ++common >= 3) return true;
            }
            return false;
        }
        for (size_t i = 0; i < cand.size(); ++i) {
            std::vector<int> next;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (g.has_edge(cand[i], cand[j])) next.push_back(cand[j]);
            cur.push_back(cand[i]);
            if (self(self, next)) return true;
            cur.pop_back();
        }
        return false;
    };
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    return rec(rec, all);
}

namespace {

struct Completion {
    int k;
    bool forbid_wk;
    std::unordered_set<std::string> failed;

    static std::string key(const Graph& h) {
        std::string s;
        for (int u = 0; u < h.n(); ++u)
            for (int v = u + 1; v < h.n(); ++v) s += h.has_edge(u, v) ? '1' : '0';
        return s;
    }

    std::optional<Graph> run(const Graph& h) {
        if (!find_clique(h, k + 2).empty()) return std::nullopt;
        if (forbid_wk && contains_wk(h, k)) return std::nullopt;
        auto cyc = shortest_chordless_cycle(h);
        if (cyc.empty()) return h;
        std::string kk = key(h);
        if (failed.count(kk)) return std::nullopt;
        // Any chordal supergraph contains a chord of this cycle.
        for (size_t i = 0; i < cyc.size(); ++i)
            for (size_t j = i + 2; j < cyc.size(); ++j) {
                if (i == 0 && j + 1 == cyc.size()) continue;
                Graph next = h;
                next.add_edge(cyc[i], cyc[j]);
                if (auto r = run(next)) return r;
            }
        failed.insert(kk);
        return std::nullopt;
    }
};

}  // namespace

std::optional<Graph> chordal_completion_exact(const Graph& g, int k, bool forbid_wk) {
    check_cap("chordal_completion_exact", g.n(), 12);
    Completion c{k, forbid_wk, {}};
    return c.run(g);
}

}  // namespace sg
