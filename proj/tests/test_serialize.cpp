#include <doctest.h>

#include "sg/generators.hpp"
#include "sg/serialize.hpp"

using namespace sg;

TEST_CASE("decomposition json round trip") {
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_partial_ktree(uniform_int(rng, 1, 12), uniform_int(rng, 1, 3), 0.7, rng);
        auto td = heuristic_treewidth(g).td;
        auto back = td_from_json(parse_json_text(td_to_json(td).dump()));
        CHECK(back.bags == td.bags);
        CHECK(back.edges == td.edges);
        CHECK(back.root == td.root);
        CHECK_FALSE(validate(back, g));
    }
    TreeDecomposition no_root{{{0}}, {}, std::nullopt};
    CHECK(td_to_json(no_root)["root"].is_null());
    CHECK_FALSE(td_from_json(td_to_json(no_root)).root);
}

TEST_CASE("decomposition json rejects malformed input") {
    CHECK_THROWS_AS(td_from_json(Json::object()), ParseError);
    CHECK_THROWS_AS(td_from_json(Json{{"nodes", {{{"id", 3}, {"bag", {0}}}}}, {"edges", Json::array()}}), ParseError);
    CHECK_THROWS_AS(td_from_json(Json{{"nodes", {{{"id", 0}, {"bag", "x"}}}}, {"edges", Json::array()}}), ParseError);
    CHECK_THROWS_AS(td_from_json(Json{{"nodes", Json::array()}, {"edges", {{0}}}}), ParseError);
    CHECK_THROWS_AS(parse_json_text("{\"nodes\": "), ParseError);
}

TEST_CASE("td violation object names the failure") {
    Graph g = path_graph(3);
    TreeDecomposition td{{{0, 1}, {2}}, {{0, 1}}, 0};
    auto bad = validate(td, g);
    REQUIRE(bad);
    Json j = td_violation_to_json(*bad);
    CHECK(j["kind"] == "edge_uncovered");
    CHECK(j["edge"] == Json({1, 2}));
}

TEST_CASE("window json round trip") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        auto w = random_grid_window(uniform_int(rng, 2, 8), uniform_int(rng, 2, 8), rng);
        auto back = window_from_json(parse_json_text(window_to_json(w).dump()));
        CHECK(back.graph == w.graph);
        CHECK(back.faces == w.faces);
        CHECK(back.diag == w.diag);
    }
    auto nested = nested_triangles_window(4);
    std::vector<Edge> jumps{{0, 11}, {1, 10}};
    Json j = window_to_json(nested, jumps);
    CHECK(j["kind"] == "faces");
    CHECK(is_window_json(j));
    CHECK_FALSE(is_window_json(graph_to_json(nested.graph)));
    auto back = window_from_json(j);
    CHECK(back.graph == nested.graph);
    CHECK(back.outer_cycle == nested.outer_cycle);
    CHECK(jumps_from_json(j) == jumps);

    Json bad = window_to_json(grid_window(2, 2, {1}));
    bad["diag"] = {2};
    CHECK_THROWS_AS(window_from_json(bad), ParseError);
    bad["version"] = 99;
    CHECK_THROWS_AS(window_from_json(bad), ParseError);
    Json wrong_size = window_to_json(grid_window(2, 2, {1}));
    wrong_size["rows"] = 3;
    CHECK_THROWS_AS(window_from_json(wrong_size), InvalidInput);
}

TEST_CASE("certificate json round trip keeps it valid") {
    Rng rng(12);
    for (int i = 0; i < 10; ++i) {
        auto w = random_grid_window(uniform_int(rng, 3, 6), uniform_int(rng, 3, 6), rng);
        auto out = chordal_partition_kt(w.graph, 5);
        REQUIRE(out.cert);
        auto back = cert_from_json(parse_json_text(cert_to_json(*out.cert).dump()));
        CHECK_FALSE(verify_cert(w.graph, back, back.t));
        CHECK(cert_to_json(back) == cert_to_json(*out.cert));

        // a moved vertex is caught and reported with its rule
        if (back.parts.size() > 1) {
            auto tampered = back;
            int v = tampered.parts[1].vertices.front();
            tampered.part_of[static_cast<size_t>(v)] = 0;
            auto bad = verify_cert(w.graph, tampered, tampered.t);
            REQUIRE(bad);
            CHECK_FALSE(cert_violation_to_json(*bad)["rule"].get<std::string>().empty());
        }
    }
    Json j = cert_to_json(*chordal_partition_kt(path_graph(3), 4).cert);
    j.erase("star");
    CHECK_THROWS_AS(cert_from_json(j), ParseError);
}

TEST_CASE("tk embedding json and violations") {
    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_tree(uniform_int(rng, 2, 10), rng);
        TkTruncation t;
        t.k = 1;
        t.params = {10, 10, 1};
        auto res = embed_into_tk(g, 1, t.params);
        REQUIRE(res.map.size() == static_cast<size_t>(g.n()));
        auto [t2, map] = tk_embedding_from_json(parse_json_text(tk_embedding_to_json(t, res.map).dump()));
        CHECK(map == res.map);
        CHECK(t2.k == 1);
        CHECK(t2.params.mult == 10);
        CHECK_FALSE(tk_embedding_violation(g, t2, map));

        auto dup = map;
        dup[1] = dup[0];
        auto bad = tk_embedding_violation(g, t2, dup);
        REQUIRE(bad);
        CHECK(bad->kind == "injective");

        auto far = map;
        far[0] = Address(11, 0);
        bad = tk_embedding_violation(g, t2, far);
        REQUIRE(bad);
        CHECK(bad->kind == "range");
        CHECK(bad->u == 0);
    }
    // edge and non-edge kinds on a plain host
    Graph h = path_graph(3);
    auto e = embedding_violation(complete_graph(2), h, {0, 2}, false);
    REQUIRE(e);
    CHECK(e->kind == "edge");
    e = embedding_violation(Graph(2), h, {0, 1}, true);
    REQUIRE(e);
    CHECK(e->kind == "non_edge");
    CHECK_FALSE(embedding_violation(Graph(2), h, {0, 1}, false));
    CHECK(embedding_violation(Graph(2), h, {0}, false)->kind == "size");
}
