#include <doctest.h>

#include <algorithm>

#include "sg/chordal.hpp"
#include "sg/universal.hpp"

using namespace sg;

namespace {

// Direct scan of the definition: for every ancestor pair, inspect the whole path.
Graph g_of_oracle(const ColouredTree& t) {
    int n = t.size();
    Graph g(n);
    for (int w = 0; w < n; ++w) {
        std::vector<int> path{w};
        for (int a = t.parent[w]; a != -1; a = t.parent[a]) path.push_back(a);
        for (size_t i = 1; i < path.size(); ++i) {
            int v = path[i];
            bool unique = true;
            for (size_t j = 0; j < i; ++j) unique = unique && t.colour[path[j]] != t.colour[v];
            if (unique) g.add_edge(v, w);
        }
    }
    return g;
}

ColouredTree random_coloured_tree(int n, int colours, Rng& rng) {
    ColouredTree t;
    for (int v = 0; v < n; ++v) {
        t.parent.push_back(v == 0 ? -1 : uniform_int(rng, 0, v - 1));
        t.colour.push_back(uniform_int(rng, 0, colours - 1));
    }
    return t;
}

ColouredTree path_tree(const std::vector<int>& colours) {
    ColouredTree t;
    for (size_t i = 0; i < colours.size(); ++i) {
        t.parent.push_back(static_cast<int>(i) - 1);
        t.colour.push_back(colours[i]);
    }
    return t;
}

}  // namespace

TEST_CASE("addresses") {
    CHECK(address_to_string({}) == "[]");
    CHECK(address_to_string({1, 0, 3}) == "[1,0,3]");
    CHECK(parse_address("[1,0,3]") == Address{1, 0, 3});
    CHECK_THROWS_AS(parse_address("[1,"), ParseError);
    CHECK(address_less({5}, {0, 0}));
    CHECK(address_less({0, 1}, {0, 2}));
}

TEST_CASE("g_of follows the unique-colour rule") {
    // A repeated colour on a tree edge blocks it, so a monochromatic path has no edges.
    CHECK(g_of(path_tree({0, 0, 0, 0})).base.m() == 0);
    // a(0)-b(1)-c(0): colour 0 reappears at c, so ac is not an edge.
    Graph abc = g_of(path_tree({0, 1, 0})).base;
    CHECK(abc.has_edge(0, 1));
    CHECK(abc.has_edge(1, 2));
    CHECK_FALSE(abc.has_edge(0, 2));
    CHECK(g_of(path_tree({0, 1, 2, 3})).base == complete_graph(4));

    Rng rng(31);
    for (int i = 0; i < 500; ++i) {
        int k = uniform_int(rng, 1, 4);
        auto t = random_coloured_tree(uniform_int(rng, 1, 14), k + 1, rng);
        auto o = g_of(t);
        CHECK(o.base == g_of_oracle(t));
        CHECK(o.is_acyclic());
        CHECK(recognize_chordal(o.base).chordal);
        CHECK(find_clique(o.base, k + 2).empty());
        for (int v = 0; v < t.size(); ++v) CHECK(is_clique(o.base, o.in[v]));
    }
    ColouredTree loop{{1, 0}, {0, 1}, {}, {}, {}};
    CHECK_THROWS_AS(g_of(loop), InvalidInput);
}

TEST_CASE("tk truncations") {
    auto t1 = tk_trunc(1, {2, 1, 1});
    CHECK(exact_treewidth(t1.graph).width == 1);
    CHECK(is_connected(t1.graph));
    auto t2 = tk_trunc(2, {3, 1, 1});
    CHECK(recognize_chordal(t2.graph).chordal);
    CHECK(clique_number(t2.graph) == 3);
    auto t3 = tk_trunc(3, {4, 2, 2});
    CHECK_FALSE(find_clique(t3.graph, 4).empty());
    CHECK(find_clique(t3.graph, 5).empty());
    TkTruncation lazy{3, {4, 2, 2}};
    for (int v = 0; v < t3.tree.size(); ++v) {
        CHECK(lazy.colour_of(t3.tree.address[v]) == t3.tree.colour[v]);
        CHECK(lazy.label_of(t3.tree.address[v]) == t3.tree.vlabel[v]);
    }
    CHECK_THROWS_AS(tk_trunc(3, {12, 12, 1}), InvalidInput);
}

TEST_CASE("rk truncations are k-simple") {
    for (int k = 1; k <= 3; ++k)
        for (int d = 0; d <= 4; ++d) {
            auto r = rk_trunc(k, d);
            CHECK_FALSE(validate(r.td, r.graph));
            CHECK(k_simple_validate(r.td, r.graph, k));
            for (int x = 0; x < r.tree.size(); ++x) {
                const auto& a = r.tree.address[x];
                for (size_t i = 1; i < a.size(); ++i) CHECK(a[i] != a[i - 1]);
            }
        }
    auto r1 = rk_trunc(1, 4);
    CHECK(r1.graph.m() == static_cast<size_t>(r1.graph.n() - 1));
    auto r2 = rk_trunc(2, 3);
    CHECK(clique_number(r2.graph) == 3);
    // A child may repeat its grandparent's colour, so deep bags are cliques of
    // size at most k+1 rather than always K_{k+1}.
    auto r3 = rk_trunc(3, 3);
    size_t biggest = 0;
    for (int x = 0; x < r3.tree.size(); ++x) {
        CHECK(is_clique(r3.graph, r3.td.bags[x]));
        CHECK(r3.td.bags[x].size() <= 4);
        biggest = std::max(biggest, r3.td.bags[x].size());
    }
    CHECK(biggest == 4);
}

TEST_CASE("sk truncations") {
    Rng rng(12);
    auto one = sk_trunc(2, 1, rng, 2);
    CHECK(one.graph == one.base.graph);
    for (int i = 0; i < 20; ++i) {
        auto s = sk_trunc(2, 3, rng, 1);
        CHECK_FALSE(validate(s.td, s.graph));
        CHECK(s.td.adhesion() <= 1);
        REQUIRE(s.graph.n() <= 12);
        CHECK(chordal_completion_exact(s.graph, 2, true).has_value());
    }
    auto s3 = sk_trunc(3, 2, rng, 2);
    CHECK(s3.td.adhesion() <= 2);
}

TEST_CASE("spanning tree of a simplicial orientation") {
    Graph k3 = complete_graph(3);
    auto o = Orientation::from_arcs(k3, {{0, 1}, {1, 2}, {0, 2}});
    auto f = find_spanning_tree(k3, o);
    CHECK(f.arcs == std::vector<Edge>{{0, 1}, {1, 2}});
    auto p4 = Orientation::from_arcs(path_graph(4), {{0, 1}, {1, 2}, {2, 3}});
    CHECK(find_spanning_tree(path_graph(4), p4).arcs.size() == 3);
    auto bad = Orientation::from_arcs(path_graph(3), {{0, 1}, {2, 1}});
    CHECK_THROWS_AS(find_spanning_tree(path_graph(3), bad), InvalidInput);

    Rng rng(40);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_ktree(8, 2, rng);
        auto so = simplicial_k_orientation(g, 2);
        REQUIRE(so);
        auto sf = find_spanning_tree(g, *so);
        for (int rep = 0; rep < 20; ++rep) {
            // random proper 3-colouring: greedy along a random perfect elimination order
            auto peo = recognize_chordal(g).peo.order.seq;
            std::vector<int> col(8, -1);
            for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
                std::vector<int> free;
                for (int c = 0; c < 3; ++c) {
                    bool ok = true;
                    for (int w : g.nbrs(*it)) ok = ok && col[w] != c;
                    if (ok) free.push_back(c);
                }
                REQUIRE_FALSE(free.empty());
                col[*it] = free[uniform_int(rng, 0, static_cast<int>(free.size()) - 1)];
            }
            ColouredTree t{sf.parent, col, {}, {}, {}};
            Graph h = g_of(t).base;
            for (auto [u, v] : g.edges()) CHECK(h.has_edge(u, v));
        }
    }
}

TEST_CASE("embedding into tk truncations") {
    auto p5 = embed_into_tk(path_graph(5), 1, {5, 1, 1});
    REQUIRE_FALSE(p5.failure);
    CHECK(verify_tk_embedding(path_graph(5), {1, {5, 1, 1}}, p5.map));
    auto k4 = embed_into_tk(complete_graph(4), 3, {4, 1, 1});
    REQUIRE_FALSE(k4.failure);
    CHECK(verify_tk_embedding(complete_graph(4), {3, {4, 1, 1}}, k4.map));
    std::vector<size_t> lens;
    for (auto& a : k4.map) lens.push_back(a.size());
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<size_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(embed_into_tk(complete_graph(4), 2, {4, 1, 1}), InvalidInput);
    // star with 3 leaves needs 3 children of one class under the centre or the root
    auto star = embed_into_tk(build_named("star", {3}), 1, {3, 1, 1});
    REQUIRE(star.failure);
    CHECK(star.failure->hint == "raise mult");

    Rng rng(77);
    for (int i = 0; i < 300; ++i) {
        int n = uniform_int(rng, 1, 12);
        int k = uniform_int(rng, 1, 3);
        Graph g = random_partial_ktree(n, k, 0.7, rng);
        TruncationParams p{n, n, 1};
        auto r = embed_into_tk(g, k, p);
        REQUIRE_FALSE(r.failure);
        CHECK(verify_tk_embedding(g, {k, p}, r.map));
    }
}

TEST_CASE("verify_embedding") {
    CHECK(verify_embedding(complete_graph(3), complete_graph(3), {0, 1, 2}, true));
    CHECK_FALSE(verify_embedding(path_graph(3), complete_graph(3), {0, 1, 2}, true));
    CHECK(verify_embedding(path_graph(3), complete_graph(3), {2, 0, 1}, false));
    CHECK_FALSE(verify_embedding(path_graph(3), complete_graph(3), {0, 0, 1}, false));
}
