#include <doctest.h>

#include <algorithm>

#include "sg/chordal.hpp"
#include "sg/generators.hpp"
#include "sg/minorfree.hpp"

using namespace sg;

namespace {

// rows x cols grid with one random diagonal per square
Graph triangulated_grid(int rows, int cols, Rng& rng) {
    Graph g = grid_graph(rows, cols);
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            if (uniform_int(rng, 0, 1))
                g.add_edge(r * cols + c, (r + 1) * cols + c + 1);
            else
                g.add_edge(r * cols + c + 1, (r + 1) * cols + c);
        }
    return g;
}

}  // namespace

TEST_CASE("connectors") {
    Graph star = build_named("star", {3});
    auto c = s_connector(star, {0, 1}, 0);
    CHECK(c.vertices == VertexSet{0, 1});

    auto p6 = s_connector(path_graph(6), {0, 5}, 0);
    CHECK(p6.vertices.size() == 6);
    CHECK_FALSE(check_connector(path_graph(6), {0, 5}, p6, 2));

    Graph grid = grid_graph(4, 4);
    auto gc = s_connector(grid, {0, 3, 12}, 0);
    CHECK_FALSE(check_connector(grid, {0, 3, 12}, gc, 3));
    for (int v = 0; v < 16; ++v) {
        if (std::binary_search(gc.vertices.begin(), gc.vertices.end(), v)) continue;
        int cnt = 0;
        for (int w : grid.nbrs(v)) cnt += std::binary_search(gc.vertices.begin(), gc.vertices.end(), w);
        CHECK(cnt <= 4);
    }

    // the middle vertex of a diamond sees the whole single geodesic
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(s_connector(diamond, {0, 3}, 0), ConnectorFailure);
    CHECK_NOTHROW(s_connector(diamond, {0, 3}, 0, 3));

    // tampered connectors are rejected
    auto bad = p6;
    bad.witness_order = {0, 2, 1, 3, 4, 5};
    CHECK(check_connector(path_graph(6), {0, 5}, bad, 2) == std::string("bandwidth"));
    CHECK_THROWS_AS(s_connector(path_graph(3), {0, 2}, 1), InvalidInput);
}

TEST_CASE("minor oracle") {
    CHECK_FALSE(is_kt_minor_free_small(complete_graph(5), 5));
    CHECK(is_kt_minor_free_small(complete_graph(4), 5));
    // 15 edges on 10 vertices: any 6-vertex minor keeps at most 11 edges
    CHECK(is_kt_minor_free_small(build_named("petersen", {}), 6));
    CHECK_FALSE(is_kt_minor_free_small(build_named("petersen", {}), 5));
    CHECK_FALSE(is_kt_minor_free_small(build_named("Kmn", {3, 3}), 4));
    CHECK(is_kt_minor_free_small(cycle_graph(6), 4));
    CHECK_FALSE(is_kt_minor_free_small(cycle_graph(6), 3));
    CHECK(is_kt_minor_free_small(path_graph(6), 3));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Graph tri = triangulated_grid(uniform_int(rng, 2, 3), 4, rng);
        CHECK(is_kt_minor_free_small(tri, 5));
    }
    CHECK(is_clique_model(complete_graph(3), {{0}, {1}, {2}}));
    CHECK_FALSE(is_clique_model(path_graph(3), {{0}, {1}, {2}}));
    CHECK_FALSE(is_clique_model(path_graph(3), {{0, 2}, {1}}));
    CHECK_THROWS_AS(is_kt_minor_free_small(Graph(13), 4), SizeCapError);
}

TEST_CASE("chordal partitions of trees") {
    Rng rng(6);
    for (int i = 0; i < 40; ++i) {
        Graph tree = random_tree(uniform_int(rng, 1, 25), rng);
        auto out = chordal_partition_kt(tree, 3);
        REQUIRE(out.cert);
        CHECK_FALSE(verify_cert(tree, *out.cert, 3));
        Graph q(static_cast<int>(out.cert->parts.size()), out.cert->quotient_edges);
        CHECK(q.m() + 1 == static_cast<size_t>(q.n()));
        for (const auto& p : out.cert->parts) CHECK(is_connected_subset(tree, p.vertices));
        auto col = partition_order_colr(tree, *out.cert, 1);
        CHECK(col.within_bound);
        CHECK(col.bound == 6);
    }
}

TEST_CASE("chordal partitions of triangulated grids") {
    Rng rng(7);
    Graph g55 = grid_graph(5, 5);
    auto grid = chordal_partition_kt(g55, 5);
    REQUIRE(grid.cert);
    CHECK_FALSE(verify_cert(g55, *grid.cert, 5));
    CHECK(partition_order_colr(g55, *grid.cert, 2).within_bound);

    for (int i = 0; i < 40; ++i) {
        int rows = uniform_int(rng, 2, 7), cols = uniform_int(rng, 2, 8);
        Graph g = triangulated_grid(rows, cols, rng);
        auto out = chordal_partition_kt(g, 5);
        REQUIRE(out.cert);
        const auto& cert = *out.cert;
        CHECK_FALSE(verify_cert(g, cert, 5));
        Graph q(static_cast<int>(cert.parts.size()), cert.quotient_edges);
        CHECK(recognize_chordal(q).chordal);
        CHECK(find_clique(q, 5).empty());
        if (q.n() <= 15) CHECK(exact_treewidth(q).width <= 3);
        int prev = 0;
        for (int r = 1; r <= 3; ++r) {
            auto col = partition_order_colr(g, cert, r);
            CHECK(col.within_bound);
            CHECK(col.result.value >= prev);
            prev = col.result.value;
        }
        if (g.n() <= 12) CHECK(is_kt_minor_free_small(g, 5));
    }
}

TEST_CASE("certificate fault injection") {
    Rng rng(8);
    Graph g = triangulated_grid(4, 4, rng);
    auto out = chordal_partition_kt(g, 5);
    REQUIRE(out.cert);
    REQUIRE_FALSE(verify_cert(g, *out.cert, 5));

    auto shifted = *out.cert;
    int v = g.n() - 1;
    shifted.coords[v][0] += 5;
    auto bad = verify_cert(g, shifted, 5);
    REQUIRE(bad);
    CHECK(bad->rule == "lipschitz");

    // move one vertex of the largest part into a fresh disconnected part
    auto split = *out.cert;
    size_t big = 0;
    for (size_t i = 0; i < split.parts.size(); ++i)
        if (split.parts[i].vertices.size() > split.parts[big].vertices.size()) big = i;
    REQUIRE(split.parts[big].vertices.size() >= 2);
    auto& vs = split.parts[big].vertices;
    // join the part with a non-adjacent vertex from another part
    int other = -1;
    for (int w = 0; w < g.n() && other < 0; ++w) {
        if (split.part_of[w] == static_cast<int>(big)) continue;
        bool adj = false;
        for (int x : vs) adj = adj || g.has_edge(x, w);
        if (!adj && split.parts[split.part_of[w]].vertices.size() > 1) other = w;
    }
    REQUIRE(other >= 0);
    auto& from = split.parts[split.part_of[other]].vertices;
    from.erase(std::find(from.begin(), from.end(), other));
    vs.push_back(other);
    std::sort(vs.begin(), vs.end());
    split.part_of[other] = static_cast<int>(big);
    auto bad2 = verify_cert(g, split, 5);
    REQUIRE(bad2);
    CHECK(bad2->rule == "connectivity");

    CHECK_THROWS_AS(partition_order_colr(g, split, 1), InvalidInput);
}

TEST_CASE("K_t inputs are refuted with a model") {
    auto out = chordal_partition_kt(complete_graph(5), 5);
    REQUIRE(out.refutation);
    CHECK(out.refutation->model.size() == 5);
    CHECK(is_clique_model(complete_graph(5), out.refutation->model));

    auto pet = chordal_partition_kt(build_named("petersen", {}), 4);
    if (pet.refutation) CHECK(is_clique_model(build_named("petersen", {}), pet.refutation->model));
}

TEST_CASE("certified minor-free inputs always partition") {
    Rng rng(11);
    int tested = 0;
    for (int i = 0; i < 6000 && tested < 400; ++i) {
        int n = uniform_int(rng, 3, 11);
        int t = uniform_int(rng, 3, 5);
        Graph g = random_gnp(n, 0.6 * uniform_real(rng), rng);
        if (!is_connected(g) || !is_kt_minor_free_small(g, t)) continue;
        ++tested;
        auto out = chordal_partition_kt(g, t);
        REQUIRE(out.cert);
        CHECK_FALSE(verify_cert(g, *out.cert, t));
    }
    CHECK(tested == 400);
    // a pendant root cannot reach two branches by geodesics meeting only at it
    Graph pendant(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(s_connector(pendant, {0, 2, 3}, 0, 3), ConnectorFailure);
    CHECK_NOTHROW(s_connector(pendant, {1, 2, 3}, 1, 3));
}
