// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. The CLI binary and a scratch directory are passed in by
// CMake.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "sg/chordal.hpp"
#include "sg/colnum.hpp"
#include "sg/generators.hpp"
#include "sg/io.hpp"
#include "sg/minorfree.hpp"
#include "sg/planar_routing.hpp"
#include "sg/products.hpp"
#include "sg/serialize.hpp"
#include "sg/treedecomp.hpp"
#include "sg/universal.hpp"

#ifndef SG_CLI_PATH
#error "SG_CLI_PATH must name the sg executable"
#endif
#ifndef SG_ACCEPTANCE_DIR
#error "SG_ACCEPTANCE_DIR must name a scratch directory"
#endif

using namespace sg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Counts failed checks and keeps the first failure message.
struct Tally {
    long checked = 0;
    long failed = 0;
    std::string first;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failed == 0) return {true, summary};
        return {false, summary + "; " + std::to_string(failed) + " violations, first: " + first};
    }
};

Graph from_mask(int n, long mask) {
    Graph g(n);
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            if (mask >> b & 1) g.add_edge(u, v);
    return g;
}

std::string describe(const Graph& g) { return emit_graph_json(g); }

// ---- 1. chordal characterizations -----------------------------------------

Outcome chordal_equivalences() {
    Tally t;
    long graphs = 0;
    auto check = [&](const Graph& g) {
        ++graphs;
        bool rec = recognize_chordal(g).chordal;
        bool tree_ok = false;
        try {
            auto ct = clique_tree(g);
            tree_ok = !validate(ct, g);
            for (const auto& bag : ct.bags) tree_ok = tree_ok && is_clique(g, bag);
        } catch (const std::exception&) {
            tree_ok = false;
        }
        int omega = clique_number(g);
        bool orient = simplicial_k_orientation(g, std::max(0, omega - 1)).has_value();
        bool seps = minimal_separators_are_cliques(g);
        t.check(rec == tree_ok && rec == orient && rec == seps, "disagreement on " + describe(g));
    };
    for (int n = 0; n <= 6; ++n) {
        long masks = 1L << (n * (n - 1) / 2);
        for (long mask = 0; mask < masks; ++mask) check(from_mask(n, mask));
    }
    Rng rng(101);
    for (int i = 0; i < 2000; ++i) check(random_gnp(uniform_int(rng, 1, 8), uniform_real(rng), rng));
    return t.outcome(std::to_string(graphs) + " graphs (all labelled n<=6, 2000 random n<=8), 4 characterizations agree");
}

// ---- 2. exact treewidth ---------------------------------------------------

Outcome exact_treewidth_values() {
    Tally t;
    auto expect = [&](const Graph& g, int tw, const std::string& name) {
        auto res = exact_treewidth(g);
        t.check(res.width == tw, name + " has treewidth " + std::to_string(res.width));
        t.check(!validate(res.td, g) && res.td.width() == res.width, name + " decomposition invalid");
        if (g.n() <= 12) {
            // feasible at tw, infeasible below
            t.check(chordal_completion_exact(g, tw, false).has_value(), name + ": no completion at tw");
            if (tw > 0) t.check(!chordal_completion_exact(g, tw - 1, false), name + ": completion below tw");
        }
    };
    Rng rng(202);
    for (int i = 0; i < 20; ++i) {
        int n = uniform_int(rng, 2, 16);
        expect(random_tree(n, rng), 1, "tree n=" + std::to_string(n));
    }
    for (int n = 1; n <= 8; ++n) expect(complete_graph(n), n - 1, "K" + std::to_string(n));
    for (int k = 2; k <= 4; ++k) expect(grid_graph(k, k), k, "grid " + std::to_string(k));
    return t.outcome("trees -> 1, K_n -> n-1 (n<=8), k x k grids -> k (k=2,3,4); completion cross-check on n<=12 "
                     "(grid 4x4 has 16 vertices, above the completion cap, so only the DP value is checked)");
}

// ---- 3. universality ------------------------------------------------------

Outcome universality() {
    Tally t;
    Rng rng(303);
    TkTruncation trunc;
    trunc.k = 3;
    trunc.params = {12, 12, 1};
    int embedded = 0;
    for (int i = 0; i < 500; ++i) {
        int n = uniform_int(rng, 1, 12);
        int k = uniform_int(rng, 1, std::min(3, std::max(1, n - 1)));
        Graph g = n > k ? random_partial_ktree(n, k, 0.4 + 0.6 * uniform_real(rng), rng) : complete_graph(n);
        auto res = embed_into_tk(g, 3, trunc.params);
        t.check(!res.failure, "embedding failed for " + describe(g));
        if (res.failure) continue;
        bool ok = verify_tk_embedding(g, trunc, res.map);
        t.check(ok, "verify_tk_embedding rejects the map for " + describe(g));
        embedded += ok;
    }
    return t.outcome(std::to_string(embedded) + "/500 graphs with tw<=3, n<=12 embedded and verified (depth 12, mult 12)");
}

// ---- 4. k-simplicity ------------------------------------------------------

Outcome k_simplicity() {
    Tally t;
    for (int k = 1; k <= 3; ++k)
        for (int depth = 1; depth <= 4; ++depth) {
            auto rk = rk_trunc(k, depth);
            t.check(!validate(rk.td, rk.graph), "rk td invalid k=" + std::to_string(k));
            t.check(k_simple_validate(rk.td, rk.graph, k),
                    "rk_trunc(" + std::to_string(k) + "," + std::to_string(depth) + ") not k-simple");
        }
    t.check(!chordal_completion_exact(build_named("W", {3}), 3, true), "W_3 admits a 3-simple completion");
    return t.outcome("rk_trunc k=1..3, depth 1..4 k-simple; W_3 has no completion for k=3");
}

// ---- 5. layered partitions ------------------------------------------------

Outcome layered_round_trip() {
    Tally t;
    Rng rng(505);
    for (int i = 0; i < 500; ++i) {
        int n = uniform_int(rng, 1, 20);
        Graph g = random_gnp(n, 0.4 * uniform_real(rng), rng);
        for (int v = 1; v < n; ++v)  // connect, so one BFS layering covers everything
            if (g.degree(v) == 0 || uniform_real(rng) < 0.2) g.add_edge(v, uniform_int(rng, 0, v - 1));
        int nparts = uniform_int(rng, 1, n);
        std::vector<VertexSet> parts(static_cast<size_t>(nparts));
        for (int v = 0; v < n; ++v) parts[static_cast<size_t>(uniform_int(rng, 0, nparts - 1))].push_back(v);
        std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
        auto lp = make_layered_partition(g, parts, bfs_layering(g, {uniform_int(rng, 0, n - 1)}));
        auto e = partition_to_embedding(g, lp);
        t.check(e.verified, "embedding not verified");
        auto back = embedding_to_partition(e.h, e.m, e.ell, g, e.coords);
        t.check(back.lp.width == lp.width, "width changed");
        t.check(back.lp.parts == lp.parts, "parts changed");
        Graph q = quotient(g, back.lp.parts);
        for (auto [a, b] : q.edges())
            t.check(e.h.has_edge(back.part_to_h[static_cast<size_t>(a)], back.part_to_h[static_cast<size_t>(b)]),
                    "quotient edge missing from h");
    }
    return t.outcome("500 partitions: width, parts and quotient relation preserved");
}

// ---- 6. colouring numbers -------------------------------------------------

Outcome colouring_ground_truth() {
    Tally t;
    long count = 0;
    auto check_col1 = [&](const Graph& g) {
        ++count;
        int col = col_r_exact(g, 1).value;
        int expect = g.n() == 0 ? 0 : degeneracy(g).value + 1;
        t.check(col == expect, "col_1 " + std::to_string(col) + " != " + std::to_string(expect) + " on " + describe(g));
    };
    for (int n = 0; n <= 6; ++n) {
        long masks = 1L << (n * (n - 1) / 2);
        for (long mask = 0; mask < masks; ++mask) check_col1(from_mask(n, mask));
    }
    Rng rng(606);
    for (int i = 0; i < 300; ++i) check_col1(random_gnp(uniform_int(rng, 1, 9), uniform_real(rng), rng));
    for (int i = 0; i < 100; ++i) {
        Graph g = random_gnp(uniform_int(rng, 1, 9), uniform_real(rng), rng);
        int tw = exact_treewidth(g).width;
        for (int r = 1; r <= 3; ++r) {
            int col = col_r_exact(g, r).value;
            t.check(col <= tw + 1, "col_" + std::to_string(r) + "=" + std::to_string(col) + " > tw+1 on " + describe(g));
        }
    }
    return t.outcome(std::to_string(count) + " graphs with col_1 = degeneracy+1; 100 graphs with col_r <= tw+1, r=1..3");
}

// ---- 7. product colouring bound -------------------------------------------

Outcome product_colouring() {
    Tally t;
    Rng rng(707);
    int worst_slack = 1 << 30;
    for (int i = 0; i < 30; ++i) {
        int want = i % 3;
        int nh = uniform_int(rng, want + 1, 7);
        Graph h = want == 0 ? Graph(nh) : want == 1 ? random_tree(nh, rng) : random_partial_ktree(nh, 2, 1.0, rng);
        auto tw = exact_treewidth(h);
        int m = uniform_int(rng, 1, 20), a = (i / 3) % 2 == 0 ? 0 : 2;
        auto po = product_order(h, tw.td, m, a, {1, 2, 3});
        for (int r = 1; r <= 3; ++r) {
            int value = col_r_of_order(po.graph, po.order, r).value;
            int bound = (tw.width + 1) * (2 * r + 1) + a;
            worst_slack = std::min(worst_slack, bound - value);
            t.check(value <= bound, "col_" + std::to_string(r) + "=" + std::to_string(value) + " > " + std::to_string(bound));
        }
        t.check(po.ok, "product_order reports a violation");
    }
    return t.outcome("30 products, r=1..3, smallest slack " + std::to_string(worst_slack));
}

// ---- 8. balanced separators -----------------------------------------------

Outcome product_separators() {
    Tally t;
    Rng rng(808);
    auto trunc = tk_trunc(6, {2, 1, 1});
    TreeDecomposition h_td = clique_tree(trunc.graph);
    double worst_ratio = 0;
    for (int i = 0; i < 50; ++i) {
        int m = uniform_int(rng, 2, 12);
        Graph host = product(ProductKind::strong, trunc.graph, path_graph(m));
        std::vector<int> all(static_cast<size_t>(host.n()));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        int n = uniform_int(rng, 20, std::min(400, host.n()));
        std::vector<int> keep(all.begin(), all.begin() + n);
        std::sort(keep.begin(), keep.end());
        Graph g = host.induced(keep);
        for (auto [u, v] : g.edges())
            if (uniform_real(rng) < 0.2) g.remove_edge(u, v);
        std::vector<int> h_of, layer_of;
        for (int x : keep) {
            h_of.push_back(x / m);
            layer_of.push_back(x % m);
        }
        auto pd = layered_product_td(g, h_of, layer_of, h_td);
        t.check(!validate(pd.td, g), "product decomposition invalid");
        auto sep = balanced_separation(g, pd.td);
        double limit = 2 * std::sqrt(7.0 * n);
        worst_ratio = std::max(worst_ratio, static_cast<double>(sep.separator.size()) / limit);
        t.check(static_cast<double>(sep.separator.size()) <= limit,
                "|S|=" + std::to_string(sep.separator.size()) + " > 2 sqrt(7n) at n=" + std::to_string(n));

        // independent check of the separation itself
        std::vector<int> side(static_cast<size_t>(n), 0);  // bit 1: a, bit 2: b
        for (int v : sep.side_a) side[static_cast<size_t>(v)] |= 1;
        for (int v : sep.side_b) side[static_cast<size_t>(v)] |= 2;
        std::set<int> s(sep.separator.begin(), sep.separator.end());
        long only_a = 0, only_b = 0;
        for (int v = 0; v < n; ++v) {
            t.check(side[static_cast<size_t>(v)] != 0, "vertex on neither side");
            t.check((side[static_cast<size_t>(v)] == 3) == (s.count(v) > 0), "sides do not meet in S");
            only_a += side[static_cast<size_t>(v)] == 1;
            only_b += side[static_cast<size_t>(v)] == 2;
        }
        for (auto [u, v] : g.edges())
            t.check((side[static_cast<size_t>(u)] | side[static_cast<size_t>(v)]) != 3 || s.count(u) || s.count(v),
                    "edge crosses the separation");
        t.check(3 * only_a <= 2 * n && 3 * only_b <= 2 * n, "side above 2n/3");
    }
    std::ostringstream d;
    d.precision(3);
    d << "50 subgraphs of tk_trunc(6) x P_m, n<=400; max |S| / 2sqrt(7n) = " << worst_ratio;
    return t.outcome(d.str());
}

// ---- 9. minor-free pipeline -----------------------------------------------

Outcome minor_free_pipeline() {
    Tally t;
    Rng rng(909);
    int worst = 0;
    for (int i = 0; i < 50; ++i) {
        int rows = uniform_int(rng, 2, 10);
        int cols = uniform_int(rng, 2, std::max(2, 60 / rows));
        auto w = random_grid_window(rows, cols, rng);
        auto out = chordal_partition_kt(w.graph, 5);
        t.check(out.cert.has_value(), "no certificate on a planar window");
        if (!out.cert) continue;
        const auto& cert = *out.cert;
        auto bad = verify_cert(w.graph, cert, 5);
        t.check(!bad, "verify_cert: " + (bad ? bad->rule : std::string()));
        std::vector<VertexSet> parts;
        for (const auto& p : cert.parts) parts.push_back(p.vertices);
        Graph q = quotient(w.graph, parts);
        t.check(clique_number(q) <= 4, "quotient has a K5");
        t.check(recognize_chordal(q).chordal, "quotient not chordal");
        if (bad) continue;
        for (int r = 1; r <= 3; ++r) {
            auto pc = partition_order_colr(w.graph, cert, r);
            worst = std::max(worst, pc.result.value);
            t.check(pc.result.value <= 12 * (2 * r + 1), "col_" + std::to_string(r) + " above 12(2r+1)");
        }
    }
    return t.outcome("50 windows n<=60, t=5: certified, chordal quotient with clique number <= 4, largest col_r " +
                     std::to_string(worst));
}

// ---- 10. routing ----------------------------------------------------------

Outcome routing() {
    Tally t;
    Rng rng(1010);
    for (int k = 1; k <= 5; ++k) {
        int ell = 2 * k + 1;
        for (int it = 0; it < 100; ++it) {
            int m = uniform_int(rng, k, 3 * k + 2);
            std::vector<int> rows(static_cast<size_t>(m));
            std::iota(rows.begin(), rows.end(), 0);
            std::shuffle(rows.begin(), rows.end(), rng);
            std::vector<int> a(rows.begin(), rows.begin() + k);
            std::shuffle(rows.begin(), rows.end(), rng);
            std::vector<int> b(rows.begin(), rows.begin() + k);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            auto paths = route_grid(ell, m, a, b);
            std::vector<char> used(static_cast<size_t>(ell * m), 0);
            bool ok = paths.size() == static_cast<size_t>(k);
            for (int i = 0; ok && i < k; ++i) {
                const auto& p = paths[static_cast<size_t>(i)];
                ok = !p.empty() && p.front() == a[static_cast<size_t>(i)] * ell &&
                     p.back() == b[static_cast<size_t>(i)] * ell + ell - 1;
                for (size_t s = 0; ok && s < p.size(); ++s) {
                    ok = p[s] >= 0 && p[s] < ell * m && !used[static_cast<size_t>(p[s])];
                    if (ok) used[static_cast<size_t>(p[s])] = 1;
                    if (ok && s > 0)
                        ok = std::abs(p[s] / ell - p[s - 1] / ell) + std::abs(p[s] % ell - p[s - 1] % ell) == 1;
                }
            }
            t.check(ok, "route_grid k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    }
    for (int ell = 3; ell <= 4; ++ell)
        for (int m = 2; m <= 3; ++m) {
            auto w = nested_polygons_window(ell, m + 1);
            std::vector<EmbeddedCycle> rings;
            for (int i = 0; i < m; ++i) {
                std::vector<int> ring;
                for (int j = 0; j < ell; ++j) ring.push_back(ell * i + j);
                rings.push_back(make_cycle(w, ring));
            }
            auto sub = cylindrical_subdivision(w, rings);
            auto bad = verify_subdivision(w.graph, sub);
            t.check(!bad && sub.ell == ell && sub.m == m,
                    "cylinder " + std::to_string(ell) + "x" + std::to_string(m) + ": " + bad.value_or("shape"));
        }
    int k4 = 0, windows = 10;
    for (int s = 1; s <= windows; ++s) {
        Rng wr(static_cast<std::uint64_t>(s));
        auto w = random_grid_window(25, 25, wr);
        auto jumps = random_interior_jumps(w, 10, 6, 4, wr);
        t.check(jumps.size() == 10, "fewer than 10 jumps drawn");
        auto r4 = clique_minor_with_jumps(w, jumps, 4);
        if (r4.model) {
            t.check(is_clique_model(graph_with_jumps(w, jumps), *r4.model), "K4 model fails the checker");
            ++k4;
        }
        auto r5 = clique_minor_with_jumps(w, {}, 5);
        t.check(!r5.model, "K5 model without jumps");
    }
    t.check(k4 > 0, "no K4 model in any 25x25 window");
    return t.outcome("route_grid 100 per k=1..5 at ell=2k+1; cylinders ell=3,4 x m=2,3 verified; K4 built in " +
                     std::to_string(k4) + "/" + std::to_string(windows) + " 25x25 windows with 10 jumps; K5 without jumps never");
}

// ---- 11. CLI determinism --------------------------------------------------

struct CliRun {
    std::string out;
    int code = -1;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + SG_CLI_PATH + "\" " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome cli_determinism() {
    Tally t;
    namespace fs = std::filesystem;
    fs::path dir = fs::path(SG_ACCEPTANCE_DIR) / std::to_string(getpid());
    fs::create_directories(dir);
    struct Cleanup {
        fs::path dir;
        ~Cleanup() {
            std::error_code ec;
            fs::remove_all(dir, ec);
        }
    } cleanup{dir};
    auto path = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };
    auto save = [&](const std::string& name, const std::string& text) { std::ofstream(dir / name, std::ios::binary) << text; };

    int commands = 0;
    // Runs the command three times; all runs must agree byte for byte.
    auto run3 = [&](const std::string& args) {
        ++commands;
        CliRun first = run_cli(args);
        for (int i = 0; i < 2; ++i) {
            CliRun again = run_cli(args);
            t.check(again.out == first.out && again.code == first.code, "output differs across runs: " + args);
        }
        return first;
    };
    auto json_of = [&](const CliRun& r, const std::string& what) {
        try {
            return Json::parse(r.out);
        } catch (const std::exception&) {
            t.check(false, what + ": output is not JSON");
            return Json::object();
        }
    };

    auto k6 = run3("--format edgelist gen K 6");
    save("k6.txt", k6.out);
    auto tw = run3("tw " + path("k6.txt"));
    t.check(tw.out == "{\"treewidth\":5}\n", "tw on K6 printed " + tw.out);

    auto tree = run3("--seed 4 gen tree 12");
    save("tree.json", tree.out);
    auto colr = run3("colr " + path("tree.json") + " --r 1");
    t.check(json_of(colr, "colr").value("value", -1) == 2, "colr on a tree is not 2");

    auto win = run3("--seed 11 gen window 8 7");
    save("window.json", win.out);
    auto cert = run3("partition-kt " + path("window.json") + " --t 5 --colr 1,2,3");
    t.check(cert.code == 0, "partition-kt exit code " + std::to_string(cert.code));
    save("cert.json", cert.out);
    auto vcert = run3("validate cert " + path("window.json") + " " + path("cert.json"));
    t.check(vcert.code == 0 && json_of(vcert, "validate cert").value("valid", false), "stored cert does not validate");

    auto heur = run3("tw " + path("window.json") + " --heuristic --td");
    save("td.json", heur.out);
    auto vtd = run3("validate td " + path("window.json") + " " + path("td.json"));
    t.check(vtd.code == 0, "heuristic td does not validate");
    Json broken = json_of(heur, "tw --td");
    if (broken.contains("td")) {
        broken["td"]["nodes"][0]["bag"] = Json::array();
        broken["td"]["nodes"][1]["bag"] = Json::array();
        save("td_broken.json", broken.dump());
        auto vbad = run3("validate td " + path("window.json") + " " + path("td_broken.json"));
        t.check(vbad.code == 4 && json_of(vbad, "validate broken").contains("violation"), "broken td not reported");
    }

    auto emb = run3("embed-tk " + path("tree.json") + " --k 1 --depth 12 --mult 12");
    save("embedding.json", emb.out);
    auto vemb = run3("validate embedding " + path("tree.json") + " " + path("embedding.json"));
    t.check(vemb.code == 0, "embedding does not validate");

    auto w3 = run3("gen W 3");
    save("w3.json", w3.out);
    auto stw = run3("stw " + path("w3.json"));
    t.check(json_of(stw, "stw").value("stw", -1) > 3, "stw(W_3) <= 3");
    t.check(json_of(run3("chordal " + path("k6.txt")), "chordal").value("chordal", false), "K6 not chordal");

    auto p3 = run3("gen P 3");
    save("p3.json", p3.out);
    auto prod = run3("product strong " + path("p3.json") + " " + path("p3.json"));
    t.check(json_of(prod, "product").value("n", 0) == 9, "P3 strong P3 is not on 9 vertices");
    auto lay = run3("layered " + path("window.json"));
    t.check(json_of(lay, "layered").value("round_trip", false), "layered round trip fails");
    auto route = run3("route --ell 7 --m 5 --a 0,2,4 --b 1,2,3");
    t.check(route.code == 0, "route failed");

    auto big = run3("--seed 3 gen window 13 13");
    save("window13.json", big.out);
    run3("tight " + path("window13.json"));
    auto w25 = run3("--seed 2 gen window 25 25");
    save("window25.json", w25.out);
    run3("--seed 5 minor-jumps " + path("window25.json") + " --p 4 --random-jumps 10");
    for (const char* g : {"gen tk 2 3 2", "gen rk 2 3", "--seed 5 gen sk 2 3", "gen nested 3", "--seed 1 gen gnp 10 0.3",
                          "--format graph6 gen petersen", "--format dot gen K 3", "--seed 8 gen partial-ktree 12 3 0.7"})
        run3(g);

    save("bad.txt", "0 1\n1 x\n");
    t.check(run3("tw " + path("bad.txt")).code == 2, "malformed input does not exit 2");
    auto k20 = run3("gen K 20");
    save("k20.json", k20.out);
    t.check(run3("tw " + path("k20.json")).code == 3, "size cap does not exit 3");

    return t.outcome(std::to_string(commands) + " CLI commands byte-identical across 3 runs; documented outputs and exit codes hold");
}

}  // namespace

// With an argument, runs only the criterion with that number.
int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "chordal characterizations agree", 60, chordal_equivalences},
        {2, "exact treewidth values", 120, exact_treewidth_values},
        {3, "embedding into tk truncations", 300, universality},
        {4, "k-simple decompositions", 0, k_simplicity},
        {5, "layered partition round trip", 0, layered_round_trip},
        {6, "colouring number ground truth", 0, colouring_ground_truth},
        {7, "product colouring bound", 0, product_colouring},
        {8, "balanced separators in products", 120, product_separators},
        {9, "minor-free partition pipeline", 300, minor_free_pipeline},
        {10, "routing in windows", 0, routing},
        {11, "CLI determinism", 0, cli_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.pass = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
        }
        failures += !o.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << secs << " s)";
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
