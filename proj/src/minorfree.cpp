#include "sg/minorfree.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "sg/chordal.hpp"
#include "sg/products.hpp"
#include "sg/universal.hpp"

namespace sg {

namespace {

int bandwidth_of(const Graph& g, const std::vector<int>& seq) {
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < seq.size(); ++i) pos[static_cast<size_t>(seq[i])] = static_cast<int>(i);
    int bw = 0;
    for (int v : seq)
        for (int w : g.nbrs(v))
            if (pos[static_cast<size_t>(w)] >= 0)
                bw = std::max(bw, std::abs(pos[static_cast<size_t>(v)] - pos[static_cast<size_t>(w)]));
    return bw;
}

// Root first, then layer by layer with the paths in the order `perm`.
std::vector<int> interleave(const std::vector<std::vector<int>>& paths, const std::vector<int>& perm, int root) {
    std::vector<int> seq{root};
    size_t longest = 0;
    for (const auto& p : paths) longest = std::max(longest, p.size());
    for (size_t d = 1; d < longest; ++d)
        for (int i : perm)
            if (paths[static_cast<size_t>(i)].size() > d) seq.push_back(paths[static_cast<size_t>(i)][d]);
    return seq;
}

// Interleaved order with the smallest bandwidth over path permutations (first 720 tried).
std::vector<int> best_witness(const Graph& g, const std::vector<std::vector<int>>& paths, int root) {
    std::vector<int> perm(paths.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    int best_bw = -1;
    int tries = 0;
    do {
        auto seq = interleave(paths, perm, root);
        int bw = bandwidth_of(g, seq);
        if (best_bw < 0 || bw < best_bw) {
            best_bw = bw;
            best = seq;
        }
    } while (++tries < 720 && std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::optional<std::string> check_connector(const Graph& g, const VertexSet& s, const Connector& c, int ell) {
    int n = g.n();
    if (ell < 2) return "ell";
    if (c.root < 0 || c.root >= n || std::find(s.begin(), s.end(), c.root) == s.end()) return "root";
    if (static_cast<int>(c.paths.size()) > ell - 1) return "path_count";
    auto dist = bfs_distances(g, c.root);
    std::vector<char> in(static_cast<size_t>(n), 0);
    VertexSet uni{c.root};
    in[static_cast<size_t>(c.root)] = 1;
    for (const auto& p : c.paths) {
        if (p.empty() || p.front() != c.root) return "geodesic";
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0 || p[i] >= n || dist[static_cast<size_t>(p[i])] != static_cast<int>(i)) return "geodesic";
            if (i > 0 && !g.has_edge(p[i - 1], p[i])) return "geodesic";
            if (i > 0) {
                if (in[static_cast<size_t>(p[i])]) return "disjoint";
                in[static_cast<size_t>(p[i])] = 1;
                uni.push_back(p[i]);
            }
        }
    }
    std::sort(uni.begin(), uni.end());
    if (uni != c.vertices) return "vertices";
    for (int v : s)
        if (v < 0 || v >= n || !in[static_cast<size_t>(v)]) return "coverage";
    if (!is_connected_subset(g, uni)) return "connected";
    auto w = c.witness_order;
    std::sort(w.begin(), w.end());
    if (w != uni) return "witness";
    if (bandwidth_of(g, c.witness_order) > ell - 1) return "bandwidth";
    for (int v = 0; v < n; ++v) {
        if (in[static_cast<size_t>(v)]) continue;
        int cnt = 0;
        for (int x : g.nbrs(v)) cnt += in[static_cast<size_t>(x)];
        if (cnt > 2 * ell - 2) return "outside_neighbours";
    }
    return std::nullopt;
}

Connector s_connector(const Graph& g, const VertexSet& s, int root, int ell, long budget) {
    int n = g.n();
    VertexSet set = s;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int v : set)
        if (v < 0 || v >= n) throw InvalidInput("s_connector: vertex out of range");
    if (!std::binary_search(set.begin(), set.end(), root)) throw InvalidInput("s_connector: root must belong to the set");
    if (!is_connected(g)) throw InvalidInput("s_connector: graph must be connected");
    if (ell == 0) ell = static_cast<int>(set.size());
    if (ell < 2 || ell < static_cast<int>(set.size())) throw InvalidInput("s_connector: need ell >= max(2, |s|)");

    auto dist = bfs_distances(g, root);
    VertexSet targets;
    for (int v : set)
        if (v != root) targets.push_back(v);
    std::sort(targets.begin(), targets.end(), [&](int a, int b) {
        int da = dist[static_cast<size_t>(a)], db = dist[static_cast<size_t>(b)];
        return da != db ? da > db : a < b;
    });

    std::vector<char> used(static_cast<size_t>(n), 0);
    used[static_cast<size_t>(root)] = 1;
    std::vector<std::vector<int>> paths;
    std::string last = "none";
    long steps = 0;
    bool out_of_budget = false;
    Connector found;

    auto finish = [&]() {
        Connector c;
        c.root = root;
        c.paths = paths;
        c.vertices.push_back(root);
        for (const auto& p : paths) c.vertices.insert(c.vertices.end(), p.begin() + 1, p.end());
        std::sort(c.vertices.begin(), c.vertices.end());
        c.witness_order = best_witness(g, paths, root);
        auto bad = check_connector(g, set, c, ell);
        if (bad) {
            last = *bad;
            return false;
        }
        found = std::move(c);
        return true;
    };

    std::vector<int> suffix;
    // search() places paths for the remaining targets; geodesics() enumerates
    // the ways to reach `target` backwards through unused vertices.
    std::function<bool()> search;
    std::function<bool(int)> geodesics = [&](int x) -> bool {
        if (out_of_budget) return false;
        if (++steps > budget) {
            out_of_budget = true;
            return false;
        }
        suffix.push_back(x);
        bool ok = false;
        if (x == root) {
            std::vector<int> path(suffix.rbegin(), suffix.rend());
            for (size_t i = 1; i < path.size(); ++i) used[static_cast<size_t>(path[i])] = 1;
            paths.push_back(path);
            std::vector<int> saved;
            saved.swap(suffix);
            ok = search();
            suffix.swap(saved);
            if (!ok) {
                paths.pop_back();
                for (size_t i = 1; i < path.size(); ++i) used[static_cast<size_t>(path[i])] = 0;
            }
        } else {
            for (int y : g.nbrs(x)) {
                if (dist[static_cast<size_t>(y)] != dist[static_cast<size_t>(x)] - 1) continue;
                if (y != root && used[static_cast<size_t>(y)]) continue;
                if ((ok = geodesics(y))) break;
            }
        }
        suffix.pop_back();
        return ok;
    };
    search = [&]() -> bool {
        auto next = std::find_if(targets.begin(), targets.end(), [&](int v) { return !used[static_cast<size_t>(v)]; });
        if (next == targets.end()) return finish();
        if (static_cast<int>(paths.size()) == ell - 1) {
            last = "path_count";
            return false;
        }
        return geodesics(*next);
    };
    if (search()) return found;
    if (out_of_budget) throw ConnectorFailure("budget", "search budget exhausted; last failure " + last);
    throw ConnectorFailure(last, "no geodesics meeting only at the root satisfy the bounds");
}

namespace {

struct Work {
    VertexSet vs;
    int parent = -1;
    int colour = 0;
    int depth = 0;
    int root = -1;
    bool done = false;
    std::vector<int> witness;
    std::vector<int> region_dist;  // distance from root inside the region; -1 outside
};

std::vector<int> neighbour_parts(const Graph& g, const std::vector<int>& part_of, const VertexSet& vs, int self) {
    std::set<int> out;
    for (int v : vs)
        for (int w : g.nbrs(v))
            if (part_of[static_cast<size_t>(w)] != self) out.insert(part_of[static_cast<size_t>(w)]);
    return {out.begin(), out.end()};
}

// Coordinate graph of a part as text: vertices sorted by (coords, star) and
// the induced edges between their positions.
std::string part_key(const Graph& g, const ChordalPartitionCert& c, const VertexSet& vs, std::vector<int>& pos) {
    VertexSet sorted = vs;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        if (c.coords[static_cast<size_t>(a)] != c.coords[static_cast<size_t>(b)])
            return c.coords[static_cast<size_t>(a)] < c.coords[static_cast<size_t>(b)];
        return c.star[static_cast<size_t>(a)] < c.star[static_cast<size_t>(b)];
    });
    std::string key;
    for (size_t i = 0; i < sorted.size(); ++i) {
        pos[static_cast<size_t>(sorted[i])] = static_cast<int>(i);
        key += "(";
        for (int x : c.coords[static_cast<size_t>(sorted[i])]) key += std::to_string(x) + ",";
        key += std::to_string(c.star[static_cast<size_t>(sorted[i])]) + ")";
    }
    key += "|";
    std::vector<Edge> es;
    for (int v : sorted)
        for (int w : g.nbrs(v))
            if (c.part_of[static_cast<size_t>(w)] == c.part_of[static_cast<size_t>(v)] && pos[static_cast<size_t>(v)] < pos[static_cast<size_t>(w)])
                es.emplace_back(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(w)]);
    std::sort(es.begin(), es.end());
    for (auto [a, b] : es) key += std::to_string(a) + "-" + std::to_string(b) + ";";
    return key;
}

struct Labels {
    std::vector<int> part;
    std::vector<int> edge;
};

Labels compute_labels(const Graph& g, const ChordalPartitionCert& c) {
    Labels out;
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    std::vector<std::string> keys;
    std::map<std::pair<int, std::string>, int> part_reg;
    std::map<int, int> per_depth;
    for (const auto& p : c.parts) {
        keys.push_back(part_key(g, c, p.vertices, pos));
        auto [it, fresh] = part_reg.emplace(std::make_pair(p.depth, keys.back()), 0);
        if (fresh) it->second = ++per_depth[p.depth];
        out.part.push_back(it->second);
    }
    std::map<std::tuple<int, int, std::string>, int> edge_reg;
    std::map<std::pair<int, int>, int> per_pair;
    for (auto [a, b] : c.quotient_edges) {
        std::string key = keys[static_cast<size_t>(a)] + "#" + keys[static_cast<size_t>(b)] + "#";
        std::vector<Edge> cross;
        for (int v : c.parts[static_cast<size_t>(a)].vertices)
            for (int w : g.nbrs(v))
                if (c.part_of[static_cast<size_t>(w)] == b) cross.emplace_back(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(w)]);
        std::sort(cross.begin(), cross.end());
        for (auto [x, y] : cross) key += std::to_string(x) + "-" + std::to_string(y) + ";";
        int m = c.parts[static_cast<size_t>(a)].depth, nd = c.parts[static_cast<size_t>(b)].depth;
        auto [it, fresh] = edge_reg.emplace(std::make_tuple(m, nd, key), 0);
        if (fresh) it->second = ++per_pair[{m, nd}];
        out.edge.push_back(it->second);
    }
    return out;
}

KtRefutation refutation_from(const std::vector<Work>& parts, int self, const std::vector<int>& nbrs, int t) {
    KtRefutation r;
    r.model.push_back(parts[static_cast<size_t>(self)].vs);
    for (int p : nbrs) {
        if (static_cast<int>(r.model.size()) == t) break;
        r.model.push_back(parts[static_cast<size_t>(p)].vs);
    }
    return r;
}

}  // namespace

PartitionOutcome chordal_partition_kt(const Graph& g, int t) {
    if (t < 3) throw InvalidInput("chordal_partition_kt: t must be at least 3");
    int n = g.n();
    if (n == 0 || !is_connected(g)) throw InvalidInput("chordal_partition_kt: graph must be connected and nonempty");
    std::vector<Work> parts;
    std::vector<int> part_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> coords(static_cast<size_t>(n));
    std::vector<int> star(static_cast<size_t>(n), 0);

    Work root;
    root.vs = {0};
    root.root = 0;
    root.done = true;
    root.witness = {0};
    root.region_dist = bfs_distances(g, 0);
    parts.push_back(root);
    part_of[0] = 0;
    coords[0] = {0};
    std::vector<char> mask(static_cast<size_t>(n), 1);
    mask[0] = 0;
    for (auto& comp : components_within(g, mask)) {
        Work w;
        w.vs = comp;
        std::sort(w.vs.begin(), w.vs.end());
        w.parent = 0;
        w.colour = 1;
        w.depth = 1;
        for (int v : w.vs) part_of[static_cast<size_t>(v)] = static_cast<int>(parts.size());
        parts.push_back(std::move(w));
    }

    PartitionOutcome out;
    for (;;) {
        int u = -1;
        for (int v = 0; v < n && u < 0; ++v)
            if (!parts[static_cast<size_t>(part_of[static_cast<size_t>(v)])].done) u = v;
        if (u < 0) break;
        int a = part_of[static_cast<size_t>(u)];
        VertexSet avs = parts[static_cast<size_t>(a)].vs;
        auto nbrs = neighbour_parts(g, part_of, avs, a);
        if (static_cast<int>(nbrs.size()) + 1 >= t) {
            out.refutation = refutation_from(parts, a, nbrs, t);
            return out;
        }
        int parent = parts[static_cast<size_t>(a)].parent;
        std::vector<int> chain;  // root part .. parent
        for (int x = parent; x != -1; x = parts[static_cast<size_t>(x)].parent) chain.push_back(x);
        std::reverse(chain.begin(), chain.end());
        for (int b : nbrs)
            if (!parts[static_cast<size_t>(b)].done || std::find(chain.begin(), chain.end(), b) == chain.end())
                throw std::logic_error("chordal_partition_kt: leaf part adjacent to a non-ancestor");

        // local copy of G[A]
        std::vector<int> local(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < avs.size(); ++i) local[static_cast<size_t>(avs[i])] = static_cast<int>(i);
        Graph ga = g.induced(avs);
        // Each neighbouring part needs one vertex of A adjacent to it; try the
        // choices in lexicographic order until a connector verifies.
        std::vector<VertexSet> cands;
        for (int b : nbrs) {
            VertexSet cb;
            for (int v : avs) {
                bool hit = false;
                for (int w : g.nbrs(v)) hit = hit || part_of[static_cast<size_t>(w)] == b;
                if (hit) cb.push_back(local[static_cast<size_t>(v)]);
            }
            cands.push_back(std::move(cb));
        }
        // The least unfinished vertex is the preferred root; other roots of A
        // are tried only when no choice of neighbour vertices works for it.
        std::optional<Connector> found;
        std::optional<ConnectorFailure> last;
        int croot = u;
        std::vector<int> roots{u};
        for (int v : avs)
            if (v != u) roots.push_back(v);
        for (int rt : roots) {
            std::vector<size_t> pick(cands.size(), 0);
            for (int tries = 0; !found && tries < 4000; ++tries) {
                VertexSet s_local{local[static_cast<size_t>(rt)]};
                for (size_t p = 0; p < cands.size(); ++p) s_local.push_back(cands[p][pick[p]]);
                try {
                    found = s_connector(ga, s_local, local[static_cast<size_t>(rt)], t - 1, 20000);
                } catch (const ConnectorFailure& e) {
                    last = e;
                }
                size_t p = 0;
                for (; p < pick.size(); ++p) {
                    if (++pick[p] < cands[p].size()) break;
                    pick[p] = 0;
                }
                if (p == pick.size()) break;
            }
            if (found) {
                croot = rt;
                break;
            }
        }
        if (!found) throw *last;
        const Connector& c = *found;

        Work& cw = parts[static_cast<size_t>(a)];
        cw.vs.clear();
        for (int v : c.vertices) cw.vs.push_back(avs[static_cast<size_t>(v)]);
        cw.root = croot;
        cw.done = true;
        cw.depth = parts[static_cast<size_t>(parent)].depth + 1;
        for (int v : c.witness_order) cw.witness.push_back(avs[static_cast<size_t>(v)]);
        std::vector<char> amask(static_cast<size_t>(n), 0);
        for (int v : avs) amask[static_cast<size_t>(v)] = 1;
        cw.region_dist = bfs_distances_within(g, croot, amask);
        for (int v : cw.vs) {
            auto& cv = coords[static_cast<size_t>(v)];
            cv.clear();
            for (int x : chain) cv.push_back(parts[static_cast<size_t>(x)].region_dist[static_cast<size_t>(v)]);
            cv.push_back(cw.region_dist[static_cast<size_t>(v)]);
        }
        for (size_t i = 0; i < c.paths.size(); ++i)
            for (size_t j = 1; j < c.paths[i].size(); ++j) star[static_cast<size_t>(avs[static_cast<size_t>(c.paths[i][j])])] = static_cast<int>(i) + 1;

        std::vector<char> rest(static_cast<size_t>(n), 0);
        for (int v : avs) rest[static_cast<size_t>(v)] = 1;
        for (int v : cw.vs) rest[static_cast<size_t>(v)] = 0;
        int cdepth = cw.depth;
        for (auto& comp : components_within(g, rest)) {
            std::sort(comp.begin(), comp.end());
            int idx = static_cast<int>(parts.size());
            for (int v : comp) part_of[static_cast<size_t>(v)] = idx;
            Work w;
            w.vs = comp;
            w.parent = a;
            w.depth = cdepth + 1;
            parts.push_back(std::move(w));
            auto xn = neighbour_parts(g, part_of, comp, idx);
            std::vector<char> taken(static_cast<size_t>(t - 1), 0);
            for (int p : xn)
                if (parts[static_cast<size_t>(p)].done) taken[static_cast<size_t>(parts[static_cast<size_t>(p)].colour)] = 1;
            auto free = std::find(taken.begin(), taken.end(), 0);
            if (free == taken.end()) {
                out.refutation = refutation_from(parts, idx, xn, t);
                return out;
            }
            parts[static_cast<size_t>(idx)].colour = static_cast<int>(free - taken.begin());
        }
    }

    ChordalPartitionCert cert;
    cert.t = t;
    cert.part_of = part_of;
    cert.coords = coords;
    cert.star = star;
    for (const auto& w : parts) {
        CertPart p;
        p.vertices = w.vs;
        p.parent = w.parent;
        p.colour = w.colour;
        p.depth = w.depth;
        p.root = w.root;
        p.witness_order = w.witness;
        cert.parts.push_back(std::move(p));
    }
    std::set<Edge> qe;
    for (auto [v, w] : g.edges()) {
        int a = part_of[static_cast<size_t>(v)], b = part_of[static_cast<size_t>(w)];
        if (a == b) continue;
        if (parts[static_cast<size_t>(a)].depth > parts[static_cast<size_t>(b)].depth) std::swap(a, b);
        qe.emplace(a, b);
    }
    cert.quotient_edges.assign(qe.begin(), qe.end());
    auto labels = compute_labels(g, cert);
    for (size_t i = 0; i < cert.parts.size(); ++i) cert.parts[i].label = labels.part[i];
    cert.edge_label = labels.edge;
    out.cert = std::move(cert);
    return out;
}

std::optional<CertViolation> verify_cert(const Graph& g, const ChordalPartitionCert& c, int t) {
    int n = g.n();
    auto fail = [](std::string rule, int part, int vertex, std::string msg) {
        return std::optional<CertViolation>(CertViolation{std::move(rule), part, vertex, std::move(msg)});
    };
    if (c.t != t || t < 3) return fail("shape", -1, -1, "certificate built for a different t");
    size_t np = c.parts.size();
    if (static_cast<int>(c.part_of.size()) != n || static_cast<int>(c.coords.size()) != n || static_cast<int>(c.star.size()) != n)
        return fail("shape", -1, -1, "per-vertex arrays do not match the graph");
    if (np == 0) return n == 0 ? std::nullopt : fail("shape", -1, -1, "no parts");

    // partition and connectivity
    std::vector<VertexSet> vsets;
    for (const auto& p : c.parts) vsets.push_back(p.vertices);
    try {
        check_partition(n, vsets);
    } catch (const InvalidInput& e) {
        return fail("partition", -1, -1, e.what());
    }
    for (size_t i = 0; i < np; ++i) {
        for (int v : c.parts[i].vertices)
            if (c.part_of[static_cast<size_t>(v)] != static_cast<int>(i)) return fail("partition", static_cast<int>(i), v, "part_of disagrees with the part lists");
        if (!is_connected_subset(g, c.parts[i].vertices)) return fail("connectivity", static_cast<int>(i), -1, "part is not connected");
    }

    // tree, depths, colours
    for (size_t i = 0; i < np; ++i) {
        const auto& p = c.parts[i];
        if (i == 0) {
            if (p.parent != -1 || p.depth != 0) return fail("tree", 0, -1, "part 0 must be the root");
        } else {
            if (p.parent < 0 || p.parent >= static_cast<int>(np) || static_cast<size_t>(p.parent) == i)
                return fail("tree", static_cast<int>(i), -1, "bad parent");
            if (p.depth != c.parts[static_cast<size_t>(p.parent)].depth + 1) return fail("tree", static_cast<int>(i), -1, "depth is not parent depth + 1");
        }
        if (p.colour < 0 || p.colour > t - 2) return fail("colour", static_cast<int>(i), -1, "colour outside 0..t-2");
    }
    auto is_anc = [&](int a, int b) {  // a is b or an ancestor of b
        for (int x = b; x != -1; x = c.parts[static_cast<size_t>(x)].parent)
            if (x == a) return true;
        return false;
    };
    for (size_t i = 1; i < np; ++i)
        if (!is_anc(0, static_cast<int>(i))) return fail("tree", static_cast<int>(i), -1, "part is not below the root");

    // quotient, its containment in G(T, c), chordality and clique bound
    std::set<Edge> qe;
    for (auto [v, w] : g.edges()) {
        int a = c.part_of[static_cast<size_t>(v)], b = c.part_of[static_cast<size_t>(w)];
        if (a == b) continue;
        if (c.parts[static_cast<size_t>(a)].depth > c.parts[static_cast<size_t>(b)].depth) std::swap(a, b);
        qe.emplace(a, b);
    }
    if (std::vector<Edge>(qe.begin(), qe.end()) != c.quotient_edges) return fail("quotient", -1, -1, "quotient edges do not match the graph");
    ColouredTree tree;
    for (const auto& p : c.parts) {
        tree.parent.push_back(p.parent);
        tree.colour.push_back(p.colour);
    }
    Orientation go = g_of(tree);
    for (auto [a, b] : c.quotient_edges)
        if (!go.has_arc(a, b)) return fail("quotient", a, -1, "quotient edge " + std::to_string(a) + "-" + std::to_string(b) + " missing from G(T,c)");
    Graph q(static_cast<int>(np), c.quotient_edges);
    if (!recognize_chordal(q).chordal) return fail("chordal", -1, -1, "quotient is not chordal");
    if (!find_clique(q, t).empty()) return fail("chordal", -1, -1, "quotient has a clique of size t");

    // coordinate shapes
    for (int v = 0; v < n; ++v) {
        const auto& p = c.parts[static_cast<size_t>(c.part_of[static_cast<size_t>(v)])];
        if (static_cast<int>(c.coords[static_cast<size_t>(v)].size()) != p.depth + 1) return fail("coordinates", c.part_of[static_cast<size_t>(v)], v, "wrong coordinate count");
        if (c.star[static_cast<size_t>(v)] < 0 || c.star[static_cast<size_t>(v)] > t - 2) return fail("coordinates", c.part_of[static_cast<size_t>(v)], v, "path index outside 0..t-2");
    }

    // rules inside each part
    for (size_t i = 0; i < np; ++i) {
        const auto& p = c.parts[i];
        int m = p.depth, pi = static_cast<int>(i);
        std::vector<int> zero;
        for (int v : p.vertices)
            if (c.coords[static_cast<size_t>(v)][static_cast<size_t>(m)] == 0) zero.push_back(v);
        if (zero.size() != 1 || zero[0] != p.root || c.star[static_cast<size_t>(p.root)] != 0)
            return fail("root", pi, p.root, "exactly the connector root must have last coordinate 0");
        for (int v : p.vertices)
            if (v != p.root && c.star[static_cast<size_t>(v)] == 0) return fail("path", pi, v, "non-root vertex without a path index");
        for (int k = 1; k <= t - 2; ++k) {
            std::vector<int> path{p.root};
            for (int v : p.vertices)
                if (c.star[static_cast<size_t>(v)] == k) path.push_back(v);
            std::sort(path.begin() + 1, path.end(), [&](int a, int b) {
                return c.coords[static_cast<size_t>(a)][static_cast<size_t>(m)] < c.coords[static_cast<size_t>(b)][static_cast<size_t>(m)];
            });
            for (size_t j = 0; j < path.size(); ++j) {
                if (c.coords[static_cast<size_t>(path[j])][static_cast<size_t>(m)] != static_cast<int>(j))
                    return fail("path", pi, path[j], "path positions are not 0,1,2,...");
                for (size_t l = j + 1; l < path.size(); ++l)
                    if (g.has_edge(path[j], path[l]) != (l == j + 1)) return fail("path", pi, path[j], "path index set does not induce a path");
            }
        }
        auto w = p.witness_order;
        std::sort(w.begin(), w.end());
        if (w != p.vertices) return fail("bandwidth", pi, -1, "witness order is not a permutation of the part");
        if (bandwidth_of(g, p.witness_order) > t - 2) return fail("bandwidth", pi, -1, "witness order has bandwidth above t-2");
        for (int v : p.vertices)
            for (int x : g.nbrs(v)) {
                if (c.part_of[static_cast<size_t>(x)] != pi) continue;
                for (int l = 0; l <= m; ++l)
                    if (std::abs(c.coords[static_cast<size_t>(v)][static_cast<size_t>(l)] - c.coords[static_cast<size_t>(x)][static_cast<size_t>(l)]) > 1)
                        return fail("lipschitz", pi, v, "edge " + std::to_string(v) + "-" + std::to_string(x) + " changes coordinate " + std::to_string(l) + " by more than 1");
            }
    }

    // rules across quotient edges
    for (auto [a, b] : c.quotient_edges) {
        int m = c.parts[static_cast<size_t>(a)].depth;
        for (int w : c.parts[static_cast<size_t>(b)].vertices) {
            int cnt = 0;
            for (int v : g.nbrs(w)) {
                if (c.part_of[static_cast<size_t>(v)] != a) continue;
                ++cnt;
                for (int l = 0; l <= m; ++l)
                    if (std::abs(c.coords[static_cast<size_t>(v)][static_cast<size_t>(l)] - c.coords[static_cast<size_t>(w)][static_cast<size_t>(l)]) > 1)
                        return fail("lipschitz", b, w, "cross edge " + std::to_string(v) + "-" + std::to_string(w) + " changes coordinate " + std::to_string(l) + " by more than 1");
            }
            if (cnt > 2 * t - 4) return fail("neighbour_bound", b, w, "vertex has more than 2t-4 neighbours in an ancestor part");
        }
    }

    // coordinates are distances inside the regions; connector outside bound
    for (size_t i = 0; i < np; ++i) {
        const auto& p = c.parts[i];
        int pi = static_cast<int>(i);
        std::vector<char> allowed(static_cast<size_t>(n), 1);
        for (int x = p.parent; x != -1; x = c.parts[static_cast<size_t>(x)].parent)
            for (int v : c.parts[static_cast<size_t>(x)].vertices) allowed[static_cast<size_t>(v)] = 0;
        auto dist = bfs_distances_within(g, p.root, allowed);
        for (int v = 0; v < n; ++v) {
            int b = c.part_of[static_cast<size_t>(v)];
            if (!is_anc(pi, b)) continue;
            if (c.coords[static_cast<size_t>(v)][static_cast<size_t>(p.depth)] != dist[static_cast<size_t>(v)])
                return fail("distance", b, v, "coordinate " + std::to_string(p.depth) + " is not the distance from the root of part " + std::to_string(pi));
        }
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<size_t>(v)] < 0 || c.part_of[static_cast<size_t>(v)] == pi) continue;
            int cnt = 0;
            for (int x : g.nbrs(v)) cnt += c.part_of[static_cast<size_t>(x)] == pi;
            if (cnt > 2 * t - 4) return fail("connector", pi, v, "vertex in the region has more than 2t-4 neighbours in the part");
        }
    }

    // labels: equal coordinate graphs share a label and distinct ones do not
    if (c.edge_label.size() != c.quotient_edges.size()) return fail("label", -1, -1, "edge label count mismatch");
    auto want = compute_labels(g, c);
    std::map<std::pair<int, int>, int> seen_part;
    std::map<std::pair<int, int>, int> seen_back;
    for (size_t i = 0; i < np; ++i) {
        auto key = std::make_pair(c.parts[i].depth, want.part[i]);
        auto [it, fresh] = seen_part.emplace(key, c.parts[i].label);
        if (!fresh && it->second != c.parts[i].label) return fail("label", static_cast<int>(i), -1, "isomorphic parts carry different labels");
        auto [jt, fresh2] = seen_back.emplace(std::make_pair(c.parts[i].depth, c.parts[i].label), want.part[i]);
        if (!fresh2 && jt->second != want.part[i]) return fail("label", static_cast<int>(i), -1, "one label names different part graphs");
    }
    return std::nullopt;
}

PartitionColr partition_order_colr(const Graph& g, const ChordalPartitionCert& cert, int r) {
    if (auto bad = verify_cert(g, cert, cert.t)) throw InvalidInput("partition_order_colr: certificate fails " + bad->rule + ": " + bad->message);
    std::vector<int> part_seq(cert.parts.size());
    std::iota(part_seq.begin(), part_seq.end(), 0);
    std::stable_sort(part_seq.begin(), part_seq.end(), [&](int a, int b) {
        return cert.parts[static_cast<size_t>(a)].depth < cert.parts[static_cast<size_t>(b)].depth;
    });
    std::vector<int> seq;
    for (int p : part_seq) {
        auto vs = cert.parts[static_cast<size_t>(p)].vertices;
        int m = cert.parts[static_cast<size_t>(p)].depth;
        std::sort(vs.begin(), vs.end(), [&](int a, int b) {
            int da = cert.coords[static_cast<size_t>(a)][static_cast<size_t>(m)], db = cert.coords[static_cast<size_t>(b)][static_cast<size_t>(m)];
            return da != db ? da < db : cert.star[static_cast<size_t>(a)] < cert.star[static_cast<size_t>(b)];
        });
        seq.insert(seq.end(), vs.begin(), vs.end());
    }
    PartitionColr out;
    out.result = col_r_of_order(g, VertexOrder::from_sequence(seq), r);
    out.bound = (cert.t - 2) * (cert.t - 1) * (2 * r + 1);
    out.within_bound = out.result.value <= out.bound;
    return out;
}

bool is_clique_model(const Graph& g, const std::vector<VertexSet>& sets) {
    std::vector<int> owner(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) return false;
        for (int v : sets[i]) {
            if (v < 0 || v >= g.n() || owner[static_cast<size_t>(v)] != -1) return false;
            owner[static_cast<size_t>(v)] = static_cast<int>(i);
        }
        if (!is_connected_subset(g, sets[i])) return false;
    }
    std::set<Edge> linked;
    for (auto [u, v] : g.edges()) {
        int a = owner[static_cast<size_t>(u)], b = owner[static_cast<size_t>(v)];
        if (a >= 0 && b >= 0 && a != b) linked.emplace(std::min(a, b), std::max(a, b));
    }
    size_t k = sets.size();
    return linked.size() == k * (k - 1) / 2;
}

namespace {

using Masks = std::vector<unsigned>;

int popcount(unsigned x) { return __builtin_popcount(x); }

Masks remove_vertex(const Masks& adj, int v) {
    Masks out;
    for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
        if (i == v) continue;
        unsigned m = adj[static_cast<size_t>(i)];
        unsigned low = m & ((1u << v) - 1), high = (m >> (v + 1)) << v;
        out.push_back(low | high);
    }
    return out;
}

Masks contract(Masks adj, int v, int w) {  // merge v into w
    adj[static_cast<size_t>(w)] |= adj[static_cast<size_t>(v)];
    adj[static_cast<size_t>(w)] &= ~(1u << w);
    for (size_t i = 0; i < adj.size(); ++i)
        if (adj[i] >> v & 1u) adj[i] |= 1u << w;
    for (size_t i = 0; i < adj.size(); ++i) adj[i] &= ~(1u << i);
    return remove_vertex(adj, v);
}

bool has_clique(const Masks& adj, unsigned cand, int need) {
    if (need == 0) return true;
    while (cand) {
        if (popcount(cand) < need) return false;
        int v = __builtin_ctz(cand);
        cand &= cand - 1;
        if (has_clique(adj, cand & adj[static_cast<size_t>(v)], need - 1)) return true;
    }
    return false;
}

struct MinorSearch {
    int t;
    std::unordered_map<std::string, bool> memo;

    bool run(Masks adj) {
        // deletions and series reductions that cannot create or destroy a K_t minor (t >= 4)
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
                int d = popcount(adj[static_cast<size_t>(v)]);
                if (d <= 1) {
                    adj = remove_vertex(adj, v);
                    changed = true;
                    break;
                }
                if (d == 2) {
                    int x = __builtin_ctz(adj[static_cast<size_t>(v)]);
                    adj = contract(adj, v, x);
                    changed = true;
                    break;
                }
            }
        }
        int n = static_cast<int>(adj.size());
        long m = 0;
        for (unsigned a : adj) m += popcount(a);
        m /= 2;
        if (n < t || m < static_cast<long>(t) * (t - 1) / 2) return false;
        std::string key(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(unsigned));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool res = has_clique(adj, (1u << n) - 1, t);
        if (!res) {
            int v = 0;
            for (int i = 1; i < n; ++i)
                if (popcount(adj[static_cast<size_t>(i)]) < popcount(adj[static_cast<size_t>(v)])) v = i;
            if (popcount(adj[static_cast<size_t>(v)]) < t - 1) {
                // v is unused or shares a branch set with a neighbour
                res = run(remove_vertex(adj, v));
                for (unsigned nb = adj[static_cast<size_t>(v)]; !res && nb; nb &= nb - 1) res = run(contract(adj, v, __builtin_ctz(nb)));
            } else {
                int w = __builtin_ctz(adj[static_cast<size_t>(v)]);
                Masks del = adj;
                del[static_cast<size_t>(v)] &= ~(1u << w);
                del[static_cast<size_t>(w)] &= ~(1u << v);
                res = run(del) || run(contract(adj, v, w));
            }
        }
        memo.emplace(std::move(key), res);
        return res;
    }
};

}  // namespace

bool is_kt_minor_free_small(const Graph& g, int t) {
    check_cap("is_kt_minor_free_small", g.n(), 12);
    if (t <= 1) return g.n() < t;
    if (t == 2) return g.m() == 0;
    if (t == 3) {  // K_3 minor iff some cycle
        return g.m() + connected_components(g).size() == static_cast<size_t>(g.n());
    }
    Masks adj(static_cast<size_t>(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    MinorSearch s{t, {}};
    return !s.run(adj);
}

}  // namespace sg
