#include "sg/planar_routing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "sg/minorfree.hpp"

namespace sg {

namespace {

size_t idx(int v) { return static_cast<size_t>(v); }

}  // namespace

std::vector<std::vector<int>> route_grid(int ell, int m, const std::vector<int>& a, const std::vector<int>& b) {
    int k = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != k) throw InvalidInput("route_grid: a and b differ in size");
    if (ell < 1 || m < 1) throw InvalidInput("route_grid: empty grid");
    if (ell < 2 * k + 1) throw InvalidInput("route_grid: need ell >= 2k+1");
    for (const auto* side : {&a, &b})
        for (int i = 0; i < k; ++i) {
            int r = (*side)[idx(i)];
            if (r < 0 || r >= m) throw InvalidInput("route_grid: row out of range");
            if (i > 0 && (*side)[idx(i - 1)] >= r)
                throw InvalidInput("route_grid: rows must be strictly increasing (top to bottom)");
        }
    auto id = [&](int row, int col) { return row * ell + col; };
    auto horizontal = [&](std::vector<int>& path, int row, int from, int to) {
        int step = from <= to ? 1 : -1;
        for (int c = from;; c += step) {
            if (path.empty() || path.back() != id(row, c)) path.push_back(id(row, c));
            if (c == to) break;
        }
    };
    auto vertical = [&](std::vector<int>& path, int col, int from, int to) {
        int step = from <= to ? 1 : -1;
        for (int r = from;; r += step) {
            if (path.empty() || path.back() != id(r, col)) path.push_back(id(r, col));
            if (r == to) break;
        }
    };

    std::vector<std::vector<int>> paths(idx(k));
    int lo = 0, hi = ell - 1;  // columns still free for the remaining pairs
    for (int i = 0; i < k; ++i) {
        int ra = a[idx(i)], rb = b[idx(i)];
        std::vector<int> p;
        horizontal(p, ra, 0, lo);
        if (rb <= ra) {
            // up one column right of the a side, then across
            horizontal(p, ra, lo, lo + 1);
            vertical(p, lo + 1, ra, rb);
            horizontal(p, rb, lo + 1, ell - 1);
            lo += 2;
        } else {
            // the mirror image: down one column left of the b side
            horizontal(p, ra, lo, hi - 1);
            vertical(p, hi - 1, ra, rb);
            horizontal(p, rb, hi - 1, ell - 1);
            hi -= 2;
        }
        paths[idx(i)] = std::move(p);
    }
    return paths;
}

// ------------------------------------------------------------------- windows

namespace {

long long dkey(int u, int v) { return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v); }

// Directed edge -> face on its left; the outer face has index faces.size().
struct Embedding {
    int outer = 0;
    std::unordered_map<long long, int> left;

    explicit Embedding(const PlaneTriangulationWindow& w) {
        outer = static_cast<int>(w.faces.size());
        for (size_t f = 0; f < w.faces.size(); ++f) {
            const auto& t = w.faces[f];
            for (int i = 0; i < 3; ++i) left[dkey(t[idx(i)], t[idx((i + 1) % 3)])] = static_cast<int>(f);
        }
        const auto& o = w.outer_cycle;
        for (size_t i = 0; i < o.size(); ++i) left[dkey(o[(i + 1) % o.size()], o[i])] = outer;
    }

    int face(int u, int v) const {
        auto it = left.find(dkey(u, v));
        return it == left.end() ? -1 : it->second;
    }
};

// Directed boundary edges of face f (for the outer face: the reversed outer cycle).
std::vector<Edge> face_edges(const PlaneTriangulationWindow& w, int f) {
    std::vector<Edge> out;
    if (f == static_cast<int>(w.faces.size())) {
        const auto& o = w.outer_cycle;
        for (size_t i = 0; i < o.size(); ++i) out.push_back({o[(i + 1) % o.size()], o[i]});
    } else {
        const auto& t = w.faces[idx(f)];
        for (int i = 0; i < 3; ++i) out.push_back({t[idx(i)], t[idx((i + 1) % 3)]});
    }
    return out;
}

std::vector<std::vector<int>> rotation_from_faces(int n, const std::vector<std::array<int, 3>>& faces) {
    std::vector<std::map<int, int>> succ(idx(n));
    std::vector<std::set<int>> has_pred(idx(n));
    for (const auto& t : faces)
        for (int i = 0; i < 3; ++i) {
            int v = t[idx(i)], b = t[idx((i + 1) % 3)], c = t[idx((i + 2) % 3)];
            succ[idx(v)][b] = c;
            has_pred[idx(v)].insert(c);
        }
    std::vector<std::vector<int>> rot(idx(n));
    for (int v = 0; v < n; ++v) {
        const auto& s = succ[idx(v)];
        if (s.empty()) continue;
        int start = s.begin()->first;
        for (const auto& [x, y] : s)
            if (!has_pred[idx(v)].count(x)) {
                start = x;
                break;
            }
        std::set<int> seen;
        for (int x = start; !seen.count(x);) {
            seen.insert(x);
            rot[idx(v)].push_back(x);
            auto it = s.find(x);
            if (it == s.end()) break;
            x = it->second;
        }
    }
    return rot;
}

}  // namespace

std::optional<std::string> check_window(const PlaneTriangulationWindow& w) {
    const Graph& g = w.graph;
    int n = g.n();
    std::set<long long> directed;
    std::set<Edge> face_edges_u;
    for (const auto& t : w.faces) {
        for (int v : t)
            if (v < 0 || v >= n) return "face vertex out of range";
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return "degenerate face";
        for (int i = 0; i < 3; ++i) {
            int u = t[idx(i)], v = t[idx((i + 1) % 3)];
            if (!g.has_edge(u, v)) return "face edge missing from the graph";
            if (!directed.insert(dkey(u, v)).second) return "directed edge in two faces";
            face_edges_u.insert({std::min(u, v), std::max(u, v)});
        }
    }
    if (face_edges_u.size() != g.m()) return "graph edge not on any face";

    const auto& o = w.outer_cycle;
    if (o.size() < 3) return "outer cycle shorter than 3";
    std::vector<char> on_outer(idx(n), 0);
    for (int v : o) {
        if (v < 0 || v >= n || on_outer[idx(v)]) return "outer cycle not simple";
        on_outer[idx(v)] = 1;
    }
    std::set<long long> outer_dir;
    for (size_t i = 0; i < o.size(); ++i) {
        int u = o[i], v = o[(i + 1) % o.size()];
        if (!directed.count(dkey(u, v)) || directed.count(dkey(v, u)))
            return "outer cycle edge not bounding exactly one face";
        outer_dir.insert(dkey(u, v));
    }
    for (long long e : directed) {
        int u = static_cast<int>(e >> 32), v = static_cast<int>(e & 0xffffffffLL);
        if (!directed.count(dkey(v, u)) && !outer_dir.count(e)) return "boundary edge off the outer cycle";
    }
    if (!is_connected(g)) return "graph is disconnected";
    long euler = static_cast<long>(n) - static_cast<long>(g.m()) + static_cast<long>(w.faces.size()) + 1;
    if (euler != 2) return "Euler count v - e + f = " + std::to_string(euler);

    if (static_cast<int>(w.rotation.size()) != n) return "rotation size mismatch";
    std::vector<std::map<int, int>> succ(idx(n));
    for (const auto& t : w.faces)
        for (int i = 0; i < 3; ++i) succ[idx(t[idx(i)])][t[idx((i + 1) % 3)]] = t[idx((i + 2) % 3)];
    for (int v = 0; v < n; ++v) {
        const auto& rot = w.rotation[idx(v)];
        std::vector<int> sorted = rot;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.nbrs(v)) return "rotation at " + std::to_string(v) + " is not its neighbourhood";
        size_t d = rot.size();
        const auto& s = succ[idx(v)];
        if (!on_outer[idx(v)]) {
            // wheel: every consecutive pair bounds a face, all the way round
            if (d < 3 || s.size() != d) return "no wheel around interior vertex " + std::to_string(v);
            for (size_t i = 0; i < d; ++i) {
                auto it = s.find(rot[i]);
                if (it == s.end() || it->second != rot[(i + 1) % d])
                    return "rotation disagrees with faces at " + std::to_string(v);
            }
        } else {
            if (d < 2 || s.size() != d - 1) return "no face path around boundary vertex " + std::to_string(v);
            for (size_t i = 0; i + 1 < d; ++i) {
                auto it = s.find(rot[i]);
                if (it == s.end() || it->second != rot[i + 1])
                    return "rotation disagrees with faces at " + std::to_string(v);
            }
        }
    }
    return std::nullopt;
}

PlaneTriangulationWindow window_from_faces(int n, const std::vector<std::array<int, 3>>& faces,
                                           const std::vector<int>& outer_cycle) {
    PlaneTriangulationWindow w;
    w.graph = Graph(n);
    for (const auto& t : faces) {
        for (int v : t)
            if (v < 0 || v >= n) throw InvalidInput("window: face vertex out of range");
        for (int i = 0; i < 3; ++i)
            if (t[idx(i)] != t[idx((i + 1) % 3)]) w.graph.add_edge(t[idx(i)], t[idx((i + 1) % 3)]);
    }
    w.faces = faces;
    w.outer_cycle = outer_cycle;
    w.rotation = rotation_from_faces(n, faces);
    if (auto bad = check_window(w)) throw InvalidInput("window: " + *bad);
    return w;
}

PlaneTriangulationWindow grid_window(int rows, int cols, const std::vector<char>& diag) {
    if (rows < 2 || cols < 2) throw InvalidInput("grid_window: need at least 2 rows and 2 columns");
    if (diag.size() != static_cast<size_t>((rows - 1) * (cols - 1)))
        throw InvalidInput("grid_window: one diagonal bit per square expected");
    std::vector<std::array<int, 3>> faces;
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            int tl = r * cols + c, tr = tl + 1, bl = tl + cols, br = bl + 1;
            if (diag[idx(r * (cols - 1) + c)]) {
                faces.push_back({tl, bl, br});
                faces.push_back({tl, br, tr});
            } else {
                faces.push_back({tl, bl, tr});
                faces.push_back({tr, bl, br});
            }
        }
    std::vector<int> outer;
    for (int r = 0; r < rows; ++r) outer.push_back(r * cols);
    for (int c = 1; c < cols; ++c) outer.push_back((rows - 1) * cols + c);
    for (int r = rows - 2; r >= 0; --r) outer.push_back(r * cols + cols - 1);
    for (int c = cols - 2; c >= 1; --c) outer.push_back(c);
    auto w = window_from_faces(rows * cols, faces, outer);
    w.rows = rows;
    w.cols = cols;
    w.diag = diag;
    return w;
}

PlaneTriangulationWindow random_grid_window(int rows, int cols, Rng& rng) {
    std::vector<char> diag(static_cast<size_t>(std::max(0, (rows - 1) * (cols - 1))));
    for (auto& d : diag) d = static_cast<char>(uniform_int(rng, 0, 1));
    return grid_window(rows, cols, diag);
}

PlaneTriangulationWindow nested_polygons_window(int ell, int k) {
    if (ell < 3 || k < 1) throw InvalidInput("nested_polygons_window: need ell >= 3 and k >= 1");
    const double pi = std::acos(-1.0);
    std::vector<std::pair<double, double>> pos;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < ell; ++j) {
            double ang = 2 * pi * j / ell + i * pi / ell;
            double radius = std::pow(3.0, i);
            pos.push_back({radius * std::cos(ang), radius * std::sin(ang)});
        }
    auto ccw = [&](int a, int b, int c) -> std::array<int, 3> {
        auto [ax, ay] = pos[idx(a)];
        auto [bx, by] = pos[idx(b)];
        auto [cx, cy] = pos[idx(c)];
        double cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        return cross > 0 ? std::array<int, 3>{a, b, c} : std::array<int, 3>{a, c, b};
    };
    std::vector<std::array<int, 3>> faces;
    for (int j = 1; j + 1 < ell; ++j) faces.push_back(ccw(0, j, j + 1));
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < ell; ++j) {
            int in = ell * i + j, in_next = ell * i + (j + 1) % ell;
            int out = ell * (i + 1) + j, out_prev = ell * (i + 1) + (j + ell - 1) % ell;
            faces.push_back(ccw(in, out_prev, out));
            faces.push_back(ccw(in, out, in_next));
        }
    std::vector<int> outer;
    for (int j = 0; j < ell; ++j) outer.push_back(ell * (k - 1) + j);
    return window_from_faces(ell * k, faces, outer);
}

PlaneTriangulationWindow nested_triangles_window(int k) { return nested_polygons_window(3, k); }

// ------------------------------------------------------------------- cycles

namespace {

// Faces reachable from `seeds` in the dual without crossing a blocked edge.
std::vector<char> dual_region(const PlaneTriangulationWindow& w, const Embedding& emb, const std::vector<int>& seeds,
                              const std::set<Edge>& blocked) {
    std::vector<char> seen(w.faces.size() + 1, 0);
    std::deque<int> q;
    for (int f : seeds)
        if (!seen[idx(f)]) {
            seen[idx(f)] = 1;
            q.push_back(f);
        }
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (auto [u, v] : face_edges(w, f)) {
            if (blocked.count({std::min(u, v), std::max(u, v)})) continue;
            int h = emb.face(v, u);
            if (h >= 0 && !seen[idx(h)]) {
                seen[idx(h)] = 1;
                q.push_back(h);
            }
        }
    }
    return seen;
}

EmbeddedCycle make_cycle_impl(const PlaneTriangulationWindow& w, const Embedding& emb, std::vector<int> cyc) {
    int n = w.graph.n();
    size_t len = cyc.size();
    if (len < 3) throw InvalidInput("cycle: fewer than 3 vertices");
    std::vector<char> on(idx(n), 0);
    std::set<Edge> blocked;
    for (size_t i = 0; i < len; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % len];
        if (u < 0 || u >= n || on[idx(u)]) throw InvalidInput("cycle: repeated or invalid vertex");
        on[idx(u)] = 1;
        if (!w.graph.has_edge(u, v)) throw InvalidInput("cycle: consecutive vertices not adjacent");
        blocked.insert({std::min(u, v), std::max(u, v)});
    }
    auto left_side = [&]() {
        std::vector<int> seeds;
        for (size_t i = 0; i < len; ++i) seeds.push_back(emb.face(cyc[i], cyc[(i + 1) % len]));
        return dual_region(w, emb, seeds, blocked);
    };
    auto region = left_side();
    if (region[idx(emb.outer)]) {
        std::reverse(cyc.begin(), cyc.end());
        region = left_side();
        if (region[idx(emb.outer)]) throw std::logic_error("cycle: both sides reach the outer face");
    }
    EmbeddedCycle c;
    c.cycle = std::move(cyc);
    std::vector<char> in(idx(n), 0);
    for (size_t f = 0; f < w.faces.size(); ++f)
        if (region[f]) {
            c.inside_faces.push_back(static_cast<int>(f));
            for (int v : w.faces[f])
                if (!on[idx(v)]) in[idx(v)] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (in[idx(v)]) c.interior.push_back(v);
    return c;
}

}  // namespace

EmbeddedCycle make_cycle(const PlaneTriangulationWindow& w, const std::vector<int>& cycle) {
    Embedding emb(w);
    return make_cycle_impl(w, emb, cycle);
}

EmbeddedCycle face_cycle(const PlaneTriangulationWindow& w, int face) {
    if (face < 0 || face >= static_cast<int>(w.faces.size())) throw InvalidInput("face_cycle: no such face");
    const auto& t = w.faces[idx(face)];
    return make_cycle(w, {t[0], t[1], t[2]});
}

int central_face(const PlaneTriangulationWindow& w) {
    int n = w.graph.n();
    std::vector<int> dist(idx(n), -1);
    std::deque<int> q;
    for (int v : w.outer_cycle) {
        dist[idx(v)] = 0;
        q.push_back(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : w.graph.nbrs(v))
            if (dist[idx(u)] < 0) {
                dist[idx(u)] = dist[idx(v)] + 1;
                q.push_back(u);
            }
    }
    int best = 0;
    std::pair<int, int> best_score{-1, -1};
    for (size_t f = 0; f < w.faces.size(); ++f) {
        const auto& t = w.faces[f];
        std::pair<int, int> score{std::min({dist[idx(t[0])], dist[idx(t[1])], dist[idx(t[2])]}),
                                  dist[idx(t[0])] + dist[idx(t[1])] + dist[idx(t[2])]};
        if (score > best_score) {
            best_score = score;
            best = static_cast<int>(f);
        }
    }
    return best;
}

bool disk_contains(const EmbeddedCycle& outer, const EmbeddedCycle& inner) {
    return std::includes(outer.inside_faces.begin(), outer.inside_faces.end(), inner.inside_faces.begin(),
                         inner.inside_faces.end());
}

bool surrounds(const EmbeddedCycle& outer, const EmbeddedCycle& inner) {
    std::set<int> a(outer.cycle.begin(), outer.cycle.end());
    for (int v : inner.cycle)
        if (a.count(v)) return false;
    return disk_contains(outer, inner);
}

std::optional<EmbeddedCycle> shortest_enclosing_cycle(const PlaneTriangulationWindow& w, const EmbeddedCycle& c,
                                                      bool disjoint) {
    Embedding emb(w);
    int n = w.graph.n();
    if (c.inside_faces.empty()) throw InvalidInput("shortest_enclosing_cycle: cycle encloses no face");
    std::vector<char> inside(w.faces.size() + 1, 0);
    for (int f : c.inside_faces) inside[idx(f)] = 1;
    std::vector<char> allowed(idx(n), 1);
    for (int v : c.interior) allowed[idx(v)] = 0;
    if (disjoint)
        for (int v : c.cycle) allowed[idx(v)] = 0;

    // a dual path from a face inside c to the outer face
    int f0 = c.inside_faces.front();
    std::vector<int> parent(w.faces.size() + 1, -2);
    std::vector<Edge> via(w.faces.size() + 1);
    std::deque<int> q{f0};
    parent[idx(f0)] = -1;
    while (!q.empty() && parent[idx(emb.outer)] == -2) {
        int f = q.front();
        q.pop_front();
        for (auto [u, v] : face_edges(w, f)) {
            int h = emb.face(v, u);
            if (h >= 0 && parent[idx(h)] == -2) {
                parent[idx(h)] = f;
                via[idx(h)] = {std::min(u, v), std::max(u, v)};
                q.push_back(h);
            }
        }
    }
    std::set<Edge> crossed;
    for (int f = emb.outer; parent[idx(f)] >= 0; f = parent[idx(f)]) crossed.insert(via[idx(f)]);

    auto edge_ok = [&](int u, int v) {
        if (!allowed[idx(u)] || !allowed[idx(v)]) return false;
        int f1 = emb.face(u, v), f2 = emb.face(v, u);
        return !(f1 >= 0 && f2 >= 0 && inside[idx(f1)] && inside[idx(f2)]);
    };

    std::set<int> starts;
    for (auto [u, v] : crossed)
        if (edge_ok(u, v)) {
            starts.insert(u);
            starts.insert(v);
        }
    std::vector<int> best;
    std::vector<int> dist(idx(2 * n)), from(idx(2 * n));
    for (int s : starts) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> bq{2 * s};
        dist[idx(2 * s)] = 0;
        while (!bq.empty() && dist[idx(2 * s + 1)] < 0) {
            int st = bq.front();
            bq.pop_front();
            int v = st / 2, bit = st % 2;
            if (!best.empty() && dist[idx(st)] + 1 >= static_cast<int>(best.size())) break;
            for (int u : w.graph.nbrs(v)) {
                if (!edge_ok(v, u)) continue;
                int nb = bit ^ (crossed.count({std::min(u, v), std::max(u, v)}) ? 1 : 0);
                int ns = 2 * u + nb;
                if (dist[idx(ns)] >= 0) continue;
                dist[idx(ns)] = dist[idx(st)] + 1;
                from[idx(ns)] = st;
                bq.push_back(ns);
            }
        }
        int d = dist[idx(2 * s + 1)];
        if (d < 0 || (!best.empty() && d >= static_cast<int>(best.size()))) continue;
        std::vector<int> walk;
        for (int st = 2 * s + 1; st != 2 * s; st = from[idx(st)]) walk.push_back(st / 2);
        std::reverse(walk.begin(), walk.end());
        best = walk;
    }
    if (best.empty()) return std::nullopt;
    auto d = make_cycle_impl(w, emb, best);
    if (!disk_contains(d, c)) throw std::logic_error("shortest_enclosing_cycle: result does not enclose");
    return d;
}

bool is_tight(const PlaneTriangulationWindow& w, const EmbeddedCycle& c) {
    auto d = shortest_enclosing_cycle(w, c, false);
    return d && d->cycle.size() >= c.cycle.size();
}

EmbeddedCycle find_tight_surrounding(const PlaneTriangulationWindow& w, const EmbeddedCycle& c) {
    auto d = shortest_enclosing_cycle(w, c, true);
    if (!d) throw BoundaryFailure("find_tight_surrounding: no surrounding cycle inside the window");
    std::set<int> outer(w.outer_cycle.begin(), w.outer_cycle.end());
    for (int v : d->cycle)
        if (outer.count(v)) throw BoundaryFailure("find_tight_surrounding: surrounding cycle touches the window boundary");
    return *d;
}

// ------------------------------------------------------------- flow paths

namespace {

// Unit vertex capacities, unit edge costs: vertex-disjoint paths from
// `sources` to target vertices within `allowed`. A source is entered only at
// its start; a target ends its path. Minimum total length for the flow value.
struct FlowResult {
    std::vector<std::vector<int>> paths;  // parallel to sources, empty where unrouted
    int value = 0;
    VertexSet cut;
};

FlowResult disjoint_paths(const Graph& g, const std::vector<char>& allowed, const std::vector<int>& sources,
                          const std::vector<char>& target) {
    int n = g.n();
    int S = 2 * n, T = 2 * n + 1, N = 2 * n + 2;
    struct Arc {
        int to, cap, cost, cap0;
        size_t rev;
        bool used() const { return cap < cap0; }
    };
    std::vector<std::vector<Arc>> adj(idx(N));
    // only vertices are capacitated, so a minimum cut consists of vertices
    auto add = [&](int u, int v, int cost, int cap = 1) {
        adj[idx(u)].push_back({v, cap, cost, cap, adj[idx(v)].size()});
        adj[idx(v)].push_back({u, 0, -cost, 0, adj[idx(u)].size() - 1});
    };
    std::vector<char> is_source(idx(n), 0);
    for (int s : sources) {
        if (!allowed[idx(s)]) throw std::logic_error("disjoint_paths: source outside the allowed set");
        is_source[idx(s)] = 1;
        add(S, 2 * s, 0);
    }
    for (int v = 0; v < n; ++v) {
        if (!allowed[idx(v)]) continue;
        add(2 * v, 2 * v + 1, 0);
        if (target[idx(v)]) {
            add(2 * v + 1, T, 0);
            continue;
        }
        for (int u : g.nbrs(v))
            if (allowed[idx(u)] && !is_source[idx(u)]) add(2 * v + 1, 2 * u, 1, n);
    }

    FlowResult res;
    const int inf = std::numeric_limits<int>::max() / 2;
    std::vector<int> dist(idx(N)), in_queue(idx(N));
    std::vector<std::pair<int, size_t>> prev(idx(N));
    while (true) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(in_queue.begin(), in_queue.end(), 0);
        std::deque<int> q{S};
        dist[idx(S)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            in_queue[idx(u)] = 0;
            for (size_t i = 0; i < adj[idx(u)].size(); ++i) {
                const auto& a = adj[idx(u)][i];
                if (a.cap > 0 && dist[idx(u)] + a.cost < dist[idx(a.to)]) {
                    dist[idx(a.to)] = dist[idx(u)] + a.cost;
                    prev[idx(a.to)] = {u, i};
                    if (!in_queue[idx(a.to)]) {
                        in_queue[idx(a.to)] = 1;
                        q.push_back(a.to);
                    }
                }
            }
        }
        if (dist[idx(T)] == inf) break;
        for (int v = T; v != S;) {
            auto [u, i] = prev[idx(v)];
            auto& a = adj[idx(u)][i];
            a.cap -= 1;
            adj[idx(v)][a.rev].cap += 1;
            v = u;
        }
        ++res.value;
    }

    res.paths.resize(sources.size());
    for (size_t k = 0; k < sources.size(); ++k) {
        int s = sources[k];
        bool used = false;
        for (const auto& a : adj[idx(S)])
            if (a.to == 2 * s && a.used()) used = true;
        if (!used) continue;
        std::vector<int> path{s};
        int node = 2 * s + 1;
        while (true) {
            int next = -1;
            for (const auto& a : adj[idx(node)])
                if (a.used() && (a.to == T || a.to % 2 == 0)) {
                    next = a.to;
                    break;
                }
            if (next < 0) throw std::logic_error("disjoint_paths: broken flow");
            if (next == T) break;
            path.push_back(next / 2);
            node = next + 1;
        }
        res.paths[k] = std::move(path);
    }

    if (res.value < static_cast<int>(sources.size())) {
        std::vector<char> reach(idx(N), 0);
        std::deque<int> q{S};
        reach[idx(S)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& a : adj[idx(u)])
                if (a.cap > 0 && !reach[idx(a.to)]) {
                    reach[idx(a.to)] = 1;
                    q.push_back(a.to);
                }
        }
        // saturated source and sink arcs stand for their vertex as well
        for (int v = 0; v < n; ++v) {
            if (!allowed[idx(v)]) continue;
            bool in = reach[idx(2 * v)], out = reach[idx(2 * v + 1)];
            if ((in && !out) || (is_source[idx(v)] && !in) || (target[idx(v)] && out)) res.cut.push_back(v);
        }
    }
    return res;
}

std::vector<char> mask_of(int n, const std::vector<int>& vs) {
    std::vector<char> m(idx(n), 0);
    for (int v : vs) m[idx(v)] = 1;
    return m;
}

// Vertices of Δ(outer) not strictly inside `inner`.
std::vector<char> annulus(int n, const EmbeddedCycle& inner, const EmbeddedCycle& outer) {
    auto m = mask_of(n, outer.interior);
    for (int v : outer.cycle) m[idx(v)] = 1;
    for (int v : inner.interior) m[idx(v)] = 0;
    return m;
}

}  // namespace

std::vector<std::vector<int>> menger_between_cycles(const PlaneTriangulationWindow& w, const EmbeddedCycle& c,
                                                    const EmbeddedCycle& d) {
    if (!disk_contains(d, c)) throw InvalidInput("menger_between_cycles: the outer disk does not contain the inner one");
    int n = w.graph.n();
    auto res = disjoint_paths(w.graph, annulus(n, c, d), c.cycle, mask_of(n, d.cycle));
    if (res.value < static_cast<int>(c.cycle.size()))
        throw MengerCut("menger_between_cycles: only " + std::to_string(res.value) + " of " +
                            std::to_string(c.cycle.size()) + " disjoint paths; cut of size " +
                            std::to_string(res.cut.size()),
                        res.cut);
    return res.paths;
}

// ------------------------------------------------------ cylindrical grids

CylindricalSubdivision cylindrical_subdivision(const PlaneTriangulationWindow& w,
                                               const std::vector<EmbeddedCycle>& cycles) {
    if (cycles.empty()) throw InvalidInput("cylindrical_subdivision: no cycles");
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (!is_tight(w, cycles[i])) throw InvalidInput("cylindrical_subdivision: cycle " + std::to_string(i) + " is not tight");
        if (i > 0 && !surrounds(cycles[i], cycles[i - 1]))
            throw InvalidInput("cylindrical_subdivision: cycle " + std::to_string(i) + " does not surround its predecessor");
    }
    CylindricalSubdivision s;
    s.ell = static_cast<int>(cycles[0].cycle.size());
    s.m = static_cast<int>(cycles.size());
    s.branch.push_back(cycles[0].cycle);
    for (size_t i = 0; i + 1 < cycles.size(); ++i) {
        auto paths = menger_between_cycles(w, cycles[i], cycles[i + 1]);
        std::map<int, const std::vector<int>*> by_start;
        for (const auto& p : paths) by_start[p.front()] = &p;
        std::vector<std::vector<int>> radial;
        std::vector<int> next;
        for (int b : s.branch.back()) {
            radial.push_back(*by_start.at(b));
            next.push_back(radial.back().back());
        }
        s.radial.push_back(std::move(radial));
        s.branch.push_back(std::move(next));
    }
    for (size_t i = 0; i < cycles.size(); ++i) {
        const auto& cyc = cycles[i].cycle;
        size_t len = cyc.size();
        std::map<int, size_t> pos;
        for (size_t k = 0; k < len; ++k) pos[cyc[k]] = k;
        std::vector<std::vector<int>> arcs;
        const auto& br = s.branch[i];
        for (size_t j = 0; j < br.size(); ++j) {
            size_t from = pos.at(br[j]), to = pos.at(br[(j + 1) % br.size()]);
            std::vector<int> arc{cyc[from]};
            for (size_t k = (from + 1) % len; k != (to + 1) % len; k = (k + 1) % len) arc.push_back(cyc[k]);
            arcs.push_back(std::move(arc));
        }
        size_t total = 0;
        for (const auto& a : arcs) total += a.size() - 1;
        if (total != len) throw std::logic_error("cylindrical_subdivision: branch vertices out of cyclic order");
        s.arcs.push_back(std::move(arcs));
    }
    return s;
}

std::optional<std::string> verify_subdivision(const Graph& g, const CylindricalSubdivision& s) {
    int ell = s.ell, m = s.m;
    if (ell < 3 || m < 1) return "shape: need ell >= 3 and m >= 1";
    if (static_cast<int>(s.branch.size()) != m || static_cast<int>(s.arcs.size()) != m ||
        static_cast<int>(s.radial.size()) != m - 1)
        return "shape: wrong number of rows";
    std::map<int, int> branch_id;
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(s.branch[idx(i)].size()) != ell || static_cast<int>(s.arcs[idx(i)].size()) != ell)
            return "shape: wrong number of columns";
        if (i + 1 < m && static_cast<int>(s.radial[idx(i)].size()) != ell) return "shape: wrong number of radial paths";
        for (int j = 0; j < ell; ++j) {
            int v = s.branch[idx(i)][idx(j)];
            if (v < 0 || v >= g.n() || !branch_id.emplace(v, j * m + i).second) return "branch: repeated or invalid vertex";
        }
    }
    std::set<int> internal;
    Graph contracted(ell * m);
    auto take = [&](const std::vector<int>& p, int from, int to) -> std::optional<std::string> {
        if (p.size() < 2 || p.front() != from || p.back() != to) return "path ends do not match the branch vertices";
        for (size_t k = 0; k + 1 < p.size(); ++k)
            if (p[k] < 0 || p[k] >= g.n() || p[k + 1] < 0 || p[k + 1] >= g.n() || !g.has_edge(p[k], p[k + 1]))
                return "path edge missing from the graph";
        for (size_t k = 1; k + 1 < p.size(); ++k)
            if (branch_id.count(p[k]) || !internal.insert(p[k]).second) return "paths not internally disjoint";
        if (!contracted.add_edge(branch_id.at(from), branch_id.at(to))) return "parallel branch paths";
        return std::nullopt;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < ell; ++j) {
            if (auto bad = take(s.arcs[idx(i)][idx(j)], s.branch[idx(i)][idx(j)], s.branch[idx(i)][idx((j + 1) % ell)]))
                return "arc: " + *bad;
            if (i + 1 < m)
                if (auto bad = take(s.radial[idx(i)][idx(j)], s.branch[idx(i)][idx(j)], s.branch[idx(i + 1)][idx(j)]))
                    return "radial: " + *bad;
        }
    if (!(contracted == build_named("cylinder", {ell, m}))) return "contraction differs from the cylindrical grid";
    return std::nullopt;
}

// ------------------------------------------------------ two disjoint paths

std::optional<std::pair<std::vector<int>, std::vector<int>>> two_disjoint_paths_small(
    const Graph& g, int p1, int p2, int q1, int q2, std::optional<Edge> extra_edge) {
    int n = g.n();
    check_cap("two_disjoint_paths_small", n, 16);
    for (int v : {p1, p2, q1, q2})
        if (v < 0 || v >= n) throw InvalidInput("two_disjoint_paths_small: vertex out of range");
    if (std::set<int>{p1, p2, q1, q2}.size() != 4) throw InvalidInput("two_disjoint_paths_small: terminals must be distinct");
    Graph h = g;
    if (extra_edge) {
        auto [u, v] = *extra_edge;
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw InvalidInput("two_disjoint_paths_small: bad extra edge");
        h.add_edge(u, v);
    }
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (v != p1 && v != p2 && v != q1 && v != q2) free.push_back(v);
    int f = static_cast<int>(free.size());
    std::vector<unsigned> masks(size_t{1} << f);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

    // BFS path inside `allowed`, or empty
    auto path_in = [&](int s, int t, const std::vector<char>& allowed) {
        std::vector<int> from(idx(n), -1);
        std::deque<int> q{s};
        from[idx(s)] = s;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : h.nbrs(v))
                if (allowed[idx(u)] && from[idx(u)] < 0) {
                    from[idx(u)] = v;
                    q.push_back(u);
                }
        }
        std::vector<int> p;
        if (from[idx(t)] < 0) return p;
        for (int v = t; v != s; v = from[idx(v)]) p.push_back(v);
        p.push_back(s);
        std::reverse(p.begin(), p.end());
        return p;
    };
    for (unsigned mask : masks) {
        std::vector<char> in_p(idx(n), 0), out_p(idx(n), 1);
        in_p[idx(p1)] = in_p[idx(p2)] = 1;
        for (int i = 0; i < f; ++i)
            if (mask >> i & 1u) in_p[idx(free[idx(i)])] = 1;
        auto p = path_in(p1, p2, in_p);
        if (p.empty()) continue;
        for (int v : p) out_p[idx(v)] = 0;
        auto q = path_in(q1, q2, out_p);
        if (!q.empty()) return std::make_pair(p, q);
    }
    return std::nullopt;
}

// ------------------------------------------------------ clique minors

Graph graph_with_jumps(const PlaneTriangulationWindow& w, const std::vector<Edge>& jumps) {
    Graph q = w.graph;
    std::set<int> ends;
    for (auto [u, v] : jumps) {
        if (u < 0 || u >= q.n() || v < 0 || v >= q.n() || u == v) throw InvalidInput("jump: bad endpoints");
        if (!ends.insert(u).second || !ends.insert(v).second) throw InvalidInput("jumps must form a matching");
        if (!q.add_edge(u, v)) throw InvalidInput("jump duplicates a window edge");
    }
    return q;
}

namespace {

// Rays in cyclic order along a ring.
std::vector<int> ring_order(const EmbeddedCycle& ring, const std::vector<int>& ends) {
    std::map<int, size_t> pos;
    for (size_t k = 0; k < ring.cycle.size(); ++k) pos[ring.cycle[k]] = k;
    std::vector<int> order(ends.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pos.at(ends[idx(a)]) < pos.at(ends[idx(b)]); });
    return order;
}

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

int new_pairs(const std::vector<int>& order, const std::set<std::pair<int, int>>& linked) {
    std::set<std::pair<int, int>> fresh;
    for (size_t k = 0; k < order.size(); ++k) {
        auto pr = ordered(order[k], order[(k + 1) % order.size()]);
        if (pr.first != pr.second && !linked.count(pr)) fresh.insert(pr);
    }
    return static_cast<int>(fresh.size());
}

// BFS path from s to a vertex satisfying `stop`, inside `allowed`.
template <class Stop>
std::vector<int> bfs_path(const Graph& g, int s, const std::vector<char>& allowed, Stop stop) {
    std::vector<int> from(idx(g.n()), -1);
    std::deque<int> q{s};
    from[idx(s)] = s;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (stop(v)) {
            std::vector<int> p;
            for (int x = v; x != s; x = from[idx(x)]) p.push_back(x);
            p.push_back(s);
            std::reverse(p.begin(), p.end());
            return p;
        }
        for (int u : g.nbrs(v))
            if (allowed[idx(u)] && from[idx(u)] < 0) {
                from[idx(u)] = v;
                q.push_back(u);
            }
    }
    return {};
}

}  // namespace

CliqueMinorResult clique_minor_with_jumps(const PlaneTriangulationWindow& w, const std::vector<Edge>& jumps, int p) {
    if (p < 1) throw InvalidInput("clique_minor_with_jumps: need p >= 1");
    Graph q = graph_with_jumps(w, jumps);
    const Graph& g = w.graph;
    int n = g.n();
    CliqueMinorResult res;

    // nested tight rings around the central face
    std::vector<EmbeddedCycle> rings;
    EmbeddedCycle cur = face_cycle(w, central_face(w));
    while (true) {
        try {
            cur = find_tight_surrounding(w, cur);
        } catch (const BoundaryFailure&) {
            break;
        }
        rings.push_back(cur);
    }
    size_t r0 = 0;
    while (r0 < rings.size() && static_cast<int>(rings[r0].cycle.size()) < p) ++r0;
    if (r0 == rings.size()) {
        res.failed_stage = "rings";
        res.detail = "no tight ring with at least " + std::to_string(p) + " vertices among " +
                     std::to_string(rings.size()) + " rings";
        return res;
    }

    // rays start evenly spaced on the first usable ring
    std::vector<std::vector<int>> rays(idx(p));
    std::vector<int> ends(idx(p));
    const auto& first = rings[r0].cycle;
    for (int i = 0; i < p; ++i) {
        ends[idx(i)] = first[static_cast<size_t>(i) * first.size() / static_cast<size_t>(p)];
        rays[idx(i)].push_back(ends[idx(i)]);
    }
    std::vector<VertexSet> extra(idx(p));
    std::set<std::pair<int, int>> linked;
    std::vector<char> jump_used(jumps.size(), 0);
    size_t ring = r0;
    int total_pairs = p * (p - 1) / 2;

    // joins rays consecutive on the current ring through the arc between them
    auto link_on_ring = [&]() {
        const auto& cyc = rings[ring].cycle;
        std::map<int, size_t> pos;
        for (size_t k = 0; k < cyc.size(); ++k) pos[cyc[k]] = k;
        auto order = ring_order(rings[ring], ends);
        for (size_t k = 0; k < order.size(); ++k) {
            int a = order[k], b = order[(k + 1) % order.size()];
            if (a == b || linked.count(ordered(a, b))) continue;
            linked.insert(ordered(a, b));
            int owner = std::min(a, b);
            for (size_t x = (pos[ends[idx(a)]] + 1) % cyc.size(); cyc[x] != ends[idx(b)]; x = (x + 1) % cyc.size())
                extra[idx(owner)].push_back(cyc[x]);
        }
    };

    link_on_ring();
    while (static_cast<int>(linked.size()) < total_pairs) {
        // the switch step from the current ring creating the most new consecutive
        // pairs; ties go to the nearest outer ring
        int best_gain = 0;
        size_t best_ring = 0, best_jump = 0;
        std::vector<std::vector<int>> best_segments;
        const EmbeddedCycle& inner = rings[ring];
        for (size_t t = ring + 1; t < rings.size(); ++t) {
            const EmbeddedCycle& outer = rings[t];
            auto region = annulus(n, inner, outer);
            auto on_outer = mask_of(n, outer.cycle);
            for (int v : inner.cycle) region[idx(v)] = 0;
            auto strictly_between = [&](int v) { return region[idx(v)] && !on_outer[idx(v)]; };
            for (size_t j = 0; j < jumps.size(); ++j) {
                if (jump_used[j]) continue;
                auto [ju, jv] = jumps[j];
                if (!strictly_between(ju) || !strictly_between(jv)) continue;
                for (int x = 0; x < p; ++x)
                    for (auto [v, u] : {std::pair{ju, jv}, std::pair{jv, ju}}) {
                        // the jumping ray: its end -> v, jump to u, u -> outer ring
                        auto allowed = region;
                        allowed[idx(ends[idx(x)])] = 1;
                        auto to_v = allowed;
                        for (int y : outer.cycle) to_v[idx(y)] = 0;
                        auto seg1 = bfs_path(g, ends[idx(x)], to_v, [&](int y) { return y == v; });
                        if (seg1.empty()) continue;
                        auto rest = allowed;
                        for (int y : seg1) rest[idx(y)] = 0;
                        if (!rest[idx(u)]) continue;
                        auto seg2 = bfs_path(g, u, rest, [&](int y) { return on_outer[idx(y)] != 0; });
                        if (seg2.empty()) continue;
                        std::vector<int> jump_path = seg1;
                        jump_path.insert(jump_path.end(), seg2.begin(), seg2.end());

                        // the other rays by disjoint paths avoiding it
                        std::vector<int> sources;
                        std::vector<int> who;
                        auto flow_allowed = region;
                        for (int i = 0; i < p; ++i)
                            if (i != x) {
                                sources.push_back(ends[idx(i)]);
                                who.push_back(i);
                                flow_allowed[idx(ends[idx(i)])] = 1;
                            }
                        for (int y : jump_path) flow_allowed[idx(y)] = 0;
                        auto flow = disjoint_paths(g, flow_allowed, sources, on_outer);
                        if (flow.value < static_cast<int>(sources.size())) continue;
                        std::vector<std::vector<int>> segments(idx(p));
                        segments[idx(x)] = jump_path;
                        for (size_t k = 0; k < who.size(); ++k) segments[idx(who[k])] = flow.paths[k];
                        std::vector<int> new_ends;
                        for (const auto& sgm : segments) new_ends.push_back(sgm.back());
                        int gain = new_pairs(ring_order(outer, new_ends), linked);
                        if (gain > best_gain) {
                            best_gain = gain;
                            best_ring = t;
                            best_jump = j;
                            best_segments = segments;
                        }
                    }
            }
        }
        if (best_gain == 0) {
            res.failed_stage = "switch";
            res.detail = "no unused jump between ring " + std::to_string(ring - r0) + " and a later ring changes the order usefully; " +
                         std::to_string(linked.size()) + " of " + std::to_string(total_pairs) + " pairs linked";
            res.rings_used = static_cast<int>(ring - r0 + 1);
            return res;
        }
        jump_used[best_jump] = 1;
        ++res.jumps_used;
        for (int i = 0; i < p; ++i) {
            const auto& sgm = best_segments[idx(i)];
            rays[idx(i)].insert(rays[idx(i)].end(), sgm.begin() + 1, sgm.end());
            ends[idx(i)] = sgm.back();
        }
        ring = best_ring;
        link_on_ring();
    }

    std::vector<VertexSet> model(idx(p));
    for (int i = 0; i < p; ++i) {
        model[idx(i)] = rays[idx(i)];
        model[idx(i)].insert(model[idx(i)].end(), extra[idx(i)].begin(), extra[idx(i)].end());
        std::sort(model[idx(i)].begin(), model[idx(i)].end());
    }
    if (!is_clique_model(q, model)) throw std::logic_error("clique_minor_with_jumps: construction produced an invalid model");
    res.model = std::move(model);
    res.rings_used = static_cast<int>(ring - r0 + 1);
    return res;
}

std::vector<Edge> random_interior_jumps(const PlaneTriangulationWindow& w, int count, int min_dist, int margin, Rng& rng) {
    int n = w.graph.n();
    std::vector<int> depth(static_cast<size_t>(n), n);
    for (int o : w.outer_cycle) {
        auto d = bfs_distances(w.graph, o);
        for (int v = 0; v < n; ++v) depth[static_cast<size_t>(v)] = std::min(depth[static_cast<size_t>(v)], d[static_cast<size_t>(v)]);
    }
    std::vector<Edge> jumps;
    std::set<int> used;
    for (int tries = 0; tries < 100000 && static_cast<int>(jumps.size()) < count; ++tries) {
        int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
        if (u == v || used.count(u) || used.count(v)) continue;
        if (depth[static_cast<size_t>(u)] < margin || depth[static_cast<size_t>(v)] < margin) continue;
        if (bfs_distances(w.graph, u)[static_cast<size_t>(v)] < min_dist) continue;
        jumps.push_back({u, v});
        used.insert(u);
        used.insert(v);
    }
    return jumps;
}

}  // namespace sg
