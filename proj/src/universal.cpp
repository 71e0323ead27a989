#include "sg/universal.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <map>

#include "sg/chordal.hpp"

namespace sg {

std::string address_to_string(const Address& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

Address parse_address(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("address: ") + e.what(), static_cast<long>(e.byte));
    }
    if (!j.is_array()) throw ParseError("address must be a bracketed list", 0);
    Address a;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long>() < 0) throw ParseError("address entries must be naturals", 0);
        a.push_back(x.get<int>());
    }
    return a;
}

bool address_less(const Address& a, const Address& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// ---- G(T, c) ----

Orientation g_of(const ColouredTree& t) {
    int n = t.size();
    if (static_cast<int>(t.colour.size()) != n) throw InvalidInput("g_of: colour vector size mismatch");
    int maxc = 0;
    for (int v = 0; v < n; ++v) {
        int p = t.parent[static_cast<size_t>(v)];
        if (p < -1 || p >= n || p == v) throw InvalidInput("g_of: bad parent pointer");
        if (t.colour[static_cast<size_t>(v)] < 0) throw InvalidInput("g_of: negative colour");
        maxc = std::max(maxc, t.colour[static_cast<size_t>(v)]);
    }
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int a = v; a != -1; a = t.parent[static_cast<size_t>(a)])
            if (++steps > n) throw InvalidInput("g_of: parent pointers contain a cycle");
    }
    std::vector<Edge> arcs;
    std::vector<int> seen(static_cast<size_t>(maxc) + 1, -1);
    for (int w = 0; w < n; ++w) {
        seen[static_cast<size_t>(t.colour[static_cast<size_t>(w)])] = w;
        for (int a = t.parent[static_cast<size_t>(w)]; a != -1; a = t.parent[static_cast<size_t>(a)]) {
            int c = t.colour[static_cast<size_t>(a)];
            if (seen[static_cast<size_t>(c)] != w) {
                arcs.emplace_back(a, w);
                seen[static_cast<size_t>(c)] = w;
            }
        }
    }
    Graph g(n, arcs);
    return Orientation::from_arcs(g, arcs);
}

// ---- T_k truncation ----

int TkTruncation::colour_of(const Address& a) const {
    int c = 0;
    int per = params.labels * params.mult;
    for (int e : a) {
        int off = e / per;
        c = off < c ? off : off + 1;
    }
    return c;
}

int TkTruncation::label_of(const Address& a) const {
    if (a.empty()) return 0;
    return (a.back() / params.mult) % params.labels;
}

int TkTruncation::child_entry(int parent_colour, int colour, int label, int copy) const {
    int off = colour < parent_colour ? colour : colour - 1;
    return (off * params.labels + label) * params.mult + copy;
}

bool TkTruncation::contains(const Address& a) const {
    if (static_cast<int>(a.size()) > params.depth) return false;
    for (int e : a)
        if (e < 0 || e >= children_per_node()) return false;
    return true;
}

long long TkTruncation::node_count(long long guard) const {
    long long total = 1, level = 1;
    long long c = children_per_node();
    for (int d = 1; d <= params.depth; ++d) {
        if (c != 0 && level > guard / c) return -1;
        level *= c;
        total += level;
        if (total > guard) return -1;
    }
    return total;
}

Truncation tk_trunc(int k, const TruncationParams& p, long long max_nodes) {
    if (k < 0 || p.depth < 1 || p.mult < 1 || p.labels < 1) throw InvalidInput("tk_trunc: parameters must be positive");
    TkTruncation t{k, p};
    if (t.node_count(max_nodes) < 0)
        throw InvalidInput("tk_trunc: truncation exceeds " + std::to_string(max_nodes) + " nodes");
    Truncation res;
    auto& tr = res.tree;
    tr.parent.push_back(-1);
    tr.colour.push_back(0);
    tr.vlabel.push_back(0);
    tr.elabel.push_back(0);
    tr.address.push_back({});
    for (size_t i = 0; i < tr.address.size(); ++i) {
        if (static_cast<int>(tr.address[i].size()) == p.depth) continue;
        for (int e = 0; e < t.children_per_node(); ++e) {
            Address a = tr.address[i];
            a.push_back(e);
            int off = e / (p.labels * p.mult);
            int pc = tr.colour[i];
            tr.parent.push_back(static_cast<int>(i));
            tr.colour.push_back(off < pc ? off : off + 1);
            tr.vlabel.push_back((e / p.mult) % p.labels);
            tr.elabel.push_back(0);
            tr.address.push_back(std::move(a));
        }
    }
    res.orientation = g_of(tr);
    res.graph = res.orientation.base;
    return res;
}

// ---- R_k truncation ----

RkTruncation rk_trunc(int k, int depth) {
    if (k < 1 || depth < 0) throw InvalidInput("rk_trunc: need k >= 1 and depth >= 0");
    RkTruncation res;
    auto& tr = res.tree;
    tr.parent.push_back(-1);
    tr.colour.push_back(0);
    tr.address.push_back({});
    for (size_t i = 0; i < tr.address.size(); ++i) {
        if (static_cast<int>(tr.address[i].size()) == depth) continue;
        for (int c = 0; c <= k; ++c) {
            if (c == tr.colour[i]) continue;
            Address a = tr.address[i];
            a.push_back(c);
            tr.parent.push_back(static_cast<int>(i));
            tr.colour.push_back(c);
            tr.address.push_back(std::move(a));
        }
    }
    auto o = g_of(tr);
    res.graph = o.base;
    for (int x = 0; x < tr.size(); ++x) {
        VertexSet bag = o.in[static_cast<size_t>(x)];
        bag.push_back(x);
        std::sort(bag.begin(), bag.end());
        res.td.bags.push_back(bag);
        if (tr.parent[static_cast<size_t>(x)] >= 0) res.td.edges.emplace_back(tr.parent[static_cast<size_t>(x)], x);
    }
    res.td.root = 0;
    return res;
}

// ---- S_k surrogate ----

SkTruncation sk_trunc(int k, int spine_size, Rng& rng, int rk_depth) {
    if (spine_size < 1) throw InvalidInput("sk_trunc: spine_size must be >= 1");
    SkTruncation res;
    res.base = rk_trunc(k, rk_depth);
    const auto& bags = res.base.td.bags;
    auto random_clique = [&](int s) {
        std::vector<int> fit;
        for (size_t i = 0; i < bags.size(); ++i)
            if (static_cast<int>(bags[i].size()) >= s) fit.push_back(static_cast<int>(i));
        std::vector<int> b = bags[static_cast<size_t>(fit[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(fit.size()) - 1))])];
        for (int i = static_cast<int>(b.size()) - 1; i > 0; --i) std::swap(b[static_cast<size_t>(i)], b[static_cast<size_t>(uniform_int(rng, 0, i))]);
        b.resize(static_cast<size_t>(s));
        return b;
    };
    int largest = 0;
    for (const auto& b : bags) largest = std::max(largest, static_cast<int>(b.size()));
    std::vector<int> parent(static_cast<size_t>(spine_size), -1);
    std::vector<CliquePair> pairs(static_cast<size_t>(spine_size));
    for (int x = 1; x < spine_size; ++x) {
        parent[static_cast<size_t>(x)] = uniform_int(rng, 0, x - 1);
        int s = k == 1 ? 0 : std::min(uniform_int(rng, 1, k - 1), largest);
        pairs[static_cast<size_t>(x)] = {random_clique(s), random_clique(s)};
    }
    auto glued = glue_over(res.base.graph, parent, pairs, std::max(0, k - 1));
    res.graph = std::move(glued.graph);
    res.td = std::move(glued.td);
    res.copy_of = std::move(glued.copy_of);
    return res;
}

// ---- spanning tree of a simplicially oriented chordal graph ----

SpanningForest find_spanning_tree(const Graph& g, const Orientation& o) {
    int n = g.n();
    if (!(o.base == g)) throw InvalidInput("find_spanning_tree: orientation is over a different graph");
    if (!o.is_acyclic()) throw InvalidInput("find_spanning_tree: orientation has a directed cycle");
    for (int v = 0; v < n; ++v)
        if (!is_clique(g, o.in[static_cast<size_t>(v)]))
            throw InvalidInput("find_spanning_tree: in-neighbourhood of " + std::to_string(v) + " is not a clique");
    SpanningForest f;
    f.parent.assign(static_cast<size_t>(n), -1);
    for (int w = 0; w < n; ++w)
        for (int v : o.in[static_cast<size_t>(w)]) {
            bool shortcut = false;
            for (int x : o.in[static_cast<size_t>(w)])
                if (o.has_arc(v, x)) {
                    shortcut = true;
                    break;
                }
            if (shortcut) continue;
            if (f.parent[static_cast<size_t>(w)] != -1)
                throw InvalidInput("find_spanning_tree: vertex " + std::to_string(w) + " gets two tree parents");
            f.parent[static_cast<size_t>(w)] = v;
            f.arcs.emplace_back(v, w);
        }
    std::sort(f.arcs.begin(), f.arcs.end());
    // Every oriented edge v->w must be realised by a directed tree path.
    for (auto [v, w] : o.arcs()) {
        int a = w, steps = 0;
        while (a != -1 && a != v) {
            a = f.parent[static_cast<size_t>(a)];
            if (++steps > n) throw InvalidInput("find_spanning_tree: tree has a cycle");
        }
        if (a != v)
            throw InvalidInput("find_spanning_tree: no directed tree path for arc " + std::to_string(v) + "->" + std::to_string(w));
    }
    return f;
}

// ---- embedding ----

EmbedResult embed_into_tk(const Graph& g, int k, const TruncationParams& p, const std::optional<TreeDecomposition>& given) {
    int n = g.n();
    EmbedResult res;
    if (k < 0 || p.depth < 1 || p.mult < 1 || p.labels < 1) throw InvalidInput("embed_into_tk: parameters must be positive");
    if (n == 0) {
        res.treewidth = -1;
        return res;
    }
    TreeDecomposition td;
    if (given) {
        if (auto v = validate(*given, g)) throw InvalidInput("embed_into_tk: invalid decomposition: " + v->message);
        if (given->width() > k) throw InvalidInput("embed_into_tk: decomposition width exceeds k");
        td = *given;
        res.treewidth = td.width();
    } else {
        auto tw = exact_treewidth(g);
        if (tw.width > k)
            throw InvalidInput("embed_into_tk: treewidth " + std::to_string(tw.width) + " exceeds k=" + std::to_string(k));
        td = tw.td;
        res.treewidth = tw.width;
    }
    auto nd = normalize(td, g);
    Graph filled = g;
    for (const auto& bag : nd.base.bags)
        for (size_t i = 0; i < bag.size(); ++i)
            for (size_t j = i + 1; j < bag.size(); ++j) filled.add_edge(bag[i], bag[j]);
    auto o = simplicial_k_orientation(filled, k);
    if (!o) throw std::logic_error("embed_into_tk: filled bags did not give a simplicial k-orientation");
    auto forest = find_spanning_tree(filled, *o);
    const auto& alpha = nd.colour;

    TkTruncation t{k, p};
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        int q = forest.parent[static_cast<size_t>(v)];
        if (q < 0)
            roots.push_back(v);
        else
            children[static_cast<size_t>(q)].push_back(v);
    }
    std::map<std::pair<Address, int>, int> used;  // (image, colour) -> copies taken (label 0)
    std::vector<Address> map(static_cast<size_t>(n));
    auto fail = [&](int v, int colour, std::string hint) {
        res.failure = EmbedFailure{v, colour, 0, std::move(hint)};
        res.map.clear();
        return res;
    };
    auto take_child = [&](const Address& at, int at_colour, int colour, Address& out) -> bool {
        if (static_cast<int>(at.size()) >= p.depth) return false;
        int& cnt = used[{at, colour}];
        if (cnt >= p.mult) return false;
        out = at;
        out.push_back(t.child_entry(at_colour, colour, 0, cnt++));
        return true;
    };
    for (size_t ci = 0; ci < roots.size(); ++ci) {
        int r = roots[ci];
        // Colours of the truncation are symmetric, so swap the root's colour
        // with the colour of the slot it lands on.
        int target = ci == 0 ? 0 : 1;
        if (ci > 0 && k < 1) return fail(r, target, "k = 0 truncation has a single vertex; cannot place another component");
        std::vector<int> pi(static_cast<size_t>(k) + 1);
        for (int c = 0; c <= k; ++c) pi[static_cast<size_t>(c)] = c;
        std::swap(pi[static_cast<size_t>(alpha[static_cast<size_t>(r)])], pi[static_cast<size_t>(target)]);
        if (ci == 0) {
            map[static_cast<size_t>(r)] = {};
        } else if (!take_child({}, 0, target, map[static_cast<size_t>(r)])) {
            return fail(r, target, "raise mult (extra components hang below the root)");
        }
        std::deque<int> q{r};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            int vc = pi[static_cast<size_t>(alpha[static_cast<size_t>(v)])];
            for (int w : children[static_cast<size_t>(v)]) {
                int wc = pi[static_cast<size_t>(alpha[static_cast<size_t>(w)])];
                const Address& at = map[static_cast<size_t>(v)];
                if (static_cast<int>(at.size()) >= p.depth) return fail(w, wc, "raise depth");
                if (!take_child(at, vc, wc, map[static_cast<size_t>(w)])) return fail(w, wc, "raise mult");
                q.push_back(w);
            }
        }
    }
    res.map = std::move(map);
    return res;
}

std::optional<EmbeddingViolation> embedding_violation(const Graph& g, const Graph& h, const std::vector<int>& map,
                                                     bool induced) {
    if (static_cast<int>(map.size()) != g.n())
        return EmbeddingViolation{"size", -1, -1, "map has " + std::to_string(map.size()) + " entries for n=" +
                                                      std::to_string(g.n())};
    std::vector<int> owner(static_cast<size_t>(std::max(h.n(), 0)), -1);
    for (int u = 0; u < g.n(); ++u) {
        int x = map[static_cast<size_t>(u)];
        if (x < 0 || x >= h.n()) return EmbeddingViolation{"range", u, -1, "image outside the host"};
        if (owner[static_cast<size_t>(x)] >= 0)
            return EmbeddingViolation{"injective", owner[static_cast<size_t>(x)], u, "two vertices share an image"};
        owner[static_cast<size_t>(x)] = u;
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool in_g = g.has_edge(u, v);
            bool in_h = h.has_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
            if (in_g && !in_h) return EmbeddingViolation{"edge", u, v, "edge not mapped to an edge"};
            if (induced && !in_g && in_h) return EmbeddingViolation{"non_edge", u, v, "non-edge mapped to an edge"};
        }
    return std::nullopt;
}

bool verify_embedding(const Graph& g, const Graph& h, const std::vector<int>& map, bool induced) {
    return !embedding_violation(g, h, map, induced);
}

std::optional<EmbeddingViolation> tk_embedding_violation(const Graph& g, const TkTruncation& t,
                                                        const std::vector<Address>& map) {
    if (static_cast<int>(map.size()) != g.n())
        return EmbeddingViolation{"size", -1, -1, "map has " + std::to_string(map.size()) + " entries for n=" +
                                                      std::to_string(g.n())};
    std::vector<Address> closure;
    for (int u = 0; u < g.n(); ++u) {
        const auto& a = map[static_cast<size_t>(u)];
        if (!t.contains(a)) return EmbeddingViolation{"range", u, -1, address_to_string(a) + " is not in the truncation"};
        for (size_t len = 0; len <= a.size(); ++len) closure.emplace_back(a.begin(), a.begin() + static_cast<long>(len));
    }
    std::sort(closure.begin(), closure.end(), address_less);
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    auto index = [&](const Address& a) {
        auto it = std::lower_bound(closure.begin(), closure.end(), a, address_less);
        return static_cast<int>(it - closure.begin());
    };
    ColouredTree tr;
    for (const auto& a : closure) {
        tr.parent.push_back(a.empty() ? -1 : index(Address(a.begin(), a.end() - 1)));
        tr.colour.push_back(t.colour_of(a));
    }
    Graph h = g_of(tr).base;
    std::vector<int> idx;
    for (const auto& a : map) idx.push_back(index(a));
    return embedding_violation(g, h, idx, false);
}

bool verify_tk_embedding(const Graph& g, const TkTruncation& t, const std::vector<Address>& map) {
    return !tk_embedding_violation(g, t, map);
}

}  // namespace sg
