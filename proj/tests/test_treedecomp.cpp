#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sg/chordal.hpp"
#include "sg/generators.hpp"

using namespace sg;

namespace {

// Min over all elimination orders of the max later-degree in the filled graph.
int treewidth_by_orders(const Graph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
        std::vector<char> gone(n, 0);
        int w = 0;
        for (int v : perm) {
            std::vector<int> nb;
            for (int x = 0; x < n; ++x)
                if (!gone[x] && a[v][x]) nb.push_back(x);
            w = std::max<int>(w, nb.size());
            for (int x : nb)
                for (int y : nb)
                    if (x != y) a[x][y] = 1;
            gone[v] = 1;
        }
        best = std::min(best, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? -1 : best;
}

bool separates(const Graph& g, const Separation& s) {
    std::vector<int> a, b;
    std::set_difference(s.side_a.begin(), s.side_a.end(), s.separator.begin(), s.separator.end(), std::back_inserter(a));
    std::set_difference(s.side_b.begin(), s.side_b.end(), s.separator.begin(), s.separator.end(), std::back_inserter(b));
    for (int u : a)
        for (int v : b)
            if (g.has_edge(u, v)) return false;
    std::vector<int> all = s.side_a;
    all.insert(all.end(), s.side_b.begin(), s.side_b.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<int>(all.size()) == g.n() && 3 * a.size() <= 2 * static_cast<size_t>(g.n()) &&
           3 * b.size() <= 2 * static_cast<size_t>(g.n());
}

}  // namespace

TEST_CASE("validate reports the first violation") {
    CHECK_FALSE(validate(clique_tree(path_graph(4)), path_graph(4)));
    TreeDecomposition split{{{0, 1}, {2, 3}}, {{0, 1}}, 0};
    auto v = validate(split, path_graph(4));
    REQUIRE(v);
    CHECK(v->kind == "edge_uncovered");
    CHECK(v->edge == Edge{1, 2});
    TreeDecomposition tri{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}, 0};
    auto t = validate(tri, complete_graph(3));
    REQUIRE(t);
    CHECK(t->kind == "subtree_disconnected");
    CHECK(t->vertex == 0);
    TreeDecomposition cyc{{{0}, {0}, {0}}, {{0, 1}, {1, 2}, {0, 2}}, 0};
    CHECK(validate(cyc, Graph(1))->kind == "tree");
}

TEST_CASE("exact treewidth") {
    Rng rng(1);
    for (int i = 0; i < 20; ++i) CHECK(exact_treewidth(random_tree(uniform_int(rng, 2, 16), rng)).width == 1);
    for (int n = 1; n <= 8; ++n) CHECK(exact_treewidth(complete_graph(n)).width == n - 1);
    CHECK(exact_treewidth(complete_graph(6)).width == 5);
    for (int k = 2; k <= 4; ++k) {
        auto r = exact_treewidth(grid_graph(k, k));
        CHECK(r.width == k);
        CHECK_FALSE(validate(r.td, grid_graph(k, k)));
        CHECK(r.td.width() == k);
    }
    CHECK_THROWS_AS(exact_treewidth(Graph(17)), SizeCapError);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_gnp(uniform_int(rng, 1, 7), 0.45, rng);
        auto r = exact_treewidth(g);
        CHECK(r.width == treewidth_by_orders(g));
        CHECK_FALSE(validate(r.td, g));
        CHECK(r.td.width() == r.width);
    }
}

TEST_CASE("treewidth agrees with chordal completion feasibility") {
    Rng rng(2);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_gnp(uniform_int(rng, 3, 10), 0.35, rng);
        int tw = exact_treewidth(g).width;
        CHECK(chordal_completion_exact(g, tw, false).has_value());
        if (tw > 0) CHECK_FALSE(chordal_completion_exact(g, tw - 1, false).has_value());
    }
}

TEST_CASE("normalization") {
    auto k3 = normalize(clique_tree(complete_graph(3)), complete_graph(3));
    CHECK(k3.base.bags[k3.root].size() == 1);
    std::vector<int> cs = k3.colour;
    std::sort(cs.begin(), cs.end());
    CHECK(cs == std::vector<int>{0, 1, 2});
    auto p4 = normalize(clique_tree(path_graph(4)), path_graph(4));
    CHECK(p4.base.num_nodes() == 4);
    CHECK(*std::max_element(p4.colour.begin(), p4.colour.end()) == 1);

    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        int n = uniform_int(rng, 1, 12);
        Graph g = uniform_int(rng, 0, 1) ? random_gnp(n, 0.3, rng) : random_partial_ktree(n, 3, 0.7, rng);
        auto td = exact_treewidth(g).td;
        auto nd = normalize(td, g);
        REQUIRE_FALSE(validate(nd.base, g));
        CHECK(nd.base.width() <= td.width());
        CHECK(nd.base.bags[nd.root].size() == 1);
        for (int w = 0; w < n; ++w) {
            int p = nd.parent[w];
            VertexSet diff;
            if (p >= 0)
                std::set_difference(nd.base.bags[w].begin(), nd.base.bags[w].end(), nd.base.bags[p].begin(),
                                    nd.base.bags[p].end(), std::back_inserter(diff));
            else
                diff = nd.base.bags[w];
            CHECK(diff == VertexSet{w});
            for (int u : nd.base.bags[w])
                if (u != w) CHECK(nd.colour[u] != nd.colour[w]);
            CHECK(nd.colour[w] <= td.width());
        }
        for (auto [u, v] : g.edges()) {
            CHECK((nd.is_ancestor(u, v) || nd.is_ancestor(v, u)));
            CHECK(nd.colour[u] != nd.colour[v]);
        }
    }
}

TEST_CASE("torso") {
    auto p5 = clique_tree(path_graph(5));
    auto t = torso(p5, path_graph(5), 1);
    CHECK(t.graph.n() == 2);
    CHECK(t.graph.m() == 1);
    TreeDecomposition star{{{0, 2}, {0, 1, 2}, {0, 2, 3}}, {{0, 1}, {0, 2}}, 0};
    auto c = torso(star, cycle_graph(4), 0);
    CHECK(c.vertices == VertexSet{0, 2});
    CHECK(c.graph.has_edge(0, 1));
    TreeDecomposition single{{{0, 1, 2, 3}}, {}, 0};
    CHECK(torso(single, cycle_graph(4), 0).graph == cycle_graph(4));
    CHECK_THROWS_AS(torso(single, cycle_graph(4), 3), InvalidInput);
}

TEST_CASE("balanced separation") {
    auto p9 = balanced_separation(path_graph(9), clique_tree(path_graph(9)));
    CHECK(p9.separator.size() <= 2);
    CHECK(separates(path_graph(9), p9));
    TreeDecomposition k5{{{0, 1, 2, 3, 4}}, {}, 0};
    auto s = balanced_separation(complete_graph(5), k5);
    CHECK(s.separator.size() == 5);
    auto g44 = grid_graph(4, 4);
    auto gs = balanced_separation(g44, exact_treewidth(g44).td);
    CHECK(gs.separator.size() <= 5);
    CHECK(separates(g44, gs));
    Rng rng(4);
    for (int i = 0; i < 500; ++i) {
        int n = uniform_int(rng, 1, 40);
        Graph g = random_partial_ktree(n, uniform_int(rng, 1, 4), 0.8, rng);
        auto td = heuristic_treewidth(g).td;
        auto sp = balanced_separation(g, td);
        CHECK(static_cast<int>(sp.separator.size()) <= td.width() + 1);
        CHECK(separates(g, sp));
    }
}

TEST_CASE("glue over a base graph") {
    auto star = glue_over(complete_graph(2), {-1, 0, 0, 0}, {{}, {{0}, {0}}, {{0}, {0}}, {{0}, {0}}});
    CHECK(star.graph.n() == 5);
    CHECK(star.graph.m() == 4);
    auto two = glue_over(complete_graph(3), {-1, 0}, {{}, {{0, 1}, {0, 1}}});
    CHECK(two.graph.n() == 4);
    CHECK(two.graph.m() == 5);
    CHECK(two.td.adhesion() == 2);
    CHECK_THROWS_AS(glue_over(path_graph(3), {-1, 0}, {{}, {{0, 2}, {0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(glue_over(complete_graph(3), {-1, 0}, {{}, {{0, 1}, {0, 1}}}, 1), InvalidInput);

    Rng rng(8);
    Graph base = grid_graph(2, 3);
    int base_tw = exact_treewidth(base).width;
    for (int i = 0; i < 40; ++i) {
        int nodes = 5;
        std::vector<int> par(nodes, -1);
        std::vector<CliquePair> pairs(nodes);
        for (int x = 1; x < nodes; ++x) {
            par[x] = uniform_int(rng, 0, x - 1);
            if (uniform_int(rng, 0, 2)) {
                auto e = base.edges()[uniform_int(rng, 0, static_cast<int>(base.m()) - 1)];
                auto f = base.edges()[uniform_int(rng, 0, static_cast<int>(base.m()) - 1)];
                pairs[x] = {{e.first, e.second}, {f.first, f.second}};
            } else {
                pairs[x] = {{uniform_int(rng, 0, 5)}, {uniform_int(rng, 0, 5)}};
            }
        }
        auto r = glue_over(base, par, pairs);
        REQUIRE_FALSE(validate(r.td, r.graph));
        for (int x = 0; x < nodes; ++x) {
            auto t = torso(r.td, r.graph, x);
            // the torso is the base copy itself: identified lists are cliques of base
            CHECK(t.graph.m() == base.m());
        }
        if (r.graph.n() <= 16) CHECK(exact_treewidth(r.graph).width <= base_tw);
    }
}

TEST_CASE("k-simplicity") {
    CHECK(k_simple_validate(clique_tree(path_graph(6)), path_graph(6), 1));
    Graph w3 = build_named("W", {3});
    auto td = exact_treewidth(w3).td;
    CHECK(td.width() == 3);
    CHECK_FALSE(k_simple_validate(td, w3, 3));
    CHECK_FALSE(k_simple_validate(clique_tree(complete_graph(5)), complete_graph(5), 3));
}
