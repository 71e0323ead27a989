// Command-line front end: JSON results on stdout (or --out), diagnostics on
// stderr. Exit codes: 0 ok, 1 other error, 2 parse error, 3 size cap,
// 4 violation found.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sg/chordal.hpp"
#include "sg/colnum.hpp"
#include "sg/io.hpp"
#include "sg/minorfree.hpp"
#include "sg/planar_routing.hpp"
#include "sg/products.hpp"
#include "sg/serialize.hpp"
#include "sg/treedecomp.hpp"
#include "sg/universal.hpp"

namespace {

using namespace sg;

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitViolation = 4;

struct RunConfig {
    std::uint64_t seed = 1;
    int cap_n = 100000;
    std::string format = "json";        // graph output format
    std::string input_format = "auto";  // graph input format
    std::string out;                    // empty: stdout
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string detect_format(const std::string& path, const std::string& requested) {
    if (requested != "auto") return requested;
    auto ends = [&](const std::string& suf) {
        return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends(".g6") || ends(".graph6")) return "graph6";
    if (ends(".json")) return "json";
    return "edgelist";
}

// A graph file, or the graph of a stored window.
Graph load_graph(const RunConfig& cfg, const std::string& path) {
    std::string text = read_text(path);
    std::string fmt = detect_format(path, cfg.input_format);
    Graph g;
    if (fmt == "json") {
        Json j = parse_json_text(text);
        g = is_window_json(j) ? window_from_json(j).graph : graph_from_json(j);
    } else {
        g = parse_graph(text, fmt);
    }
    check_cap("input", g.n(), cfg.cap_n);
    return g;
}

struct LoadedWindow {
    PlaneTriangulationWindow window;
    std::vector<Edge> jumps;
};

LoadedWindow load_window(const RunConfig& cfg, const std::string& path) {
    Json j = parse_json_text(read_text(path));
    if (!is_window_json(j)) throw ParseError("expected a stored window", 0);
    LoadedWindow lw{window_from_json(j), jumps_from_json(j)};
    check_cap("input", lw.window.graph.n(), cfg.cap_n);
    return lw;
}

Json load_json(const std::string& path) { return parse_json_text(read_text(path)); }

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + cfg.out);
    out << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump() + "\n"); }

void emit_graph_out(const RunConfig& cfg, const Graph& g) {
    if (cfg.format == "dot") {
        emit(cfg, emit_dot(g));
        return;
    }
    std::string text = emit_graph(g, cfg.format);
    if (text.empty() || text.back() != '\n') text += "\n";
    emit(cfg, text);
}

std::vector<int> int_params(const std::vector<std::string>& params, size_t from, size_t count, const char* family) {
    if (params.size() < from + count)
        throw InvalidInput(std::string(family) + ": expected " + std::to_string(count) + " parameters");
    std::vector<int> out;
    for (size_t i = from; i < params.size(); ++i) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(params[i], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != params[i].size()) throw ParseError(std::string(family) + ": bad integer \"" + params[i] + "\"", static_cast<long>(i));
        out.push_back(v);
    }
    return out;
}

double real_param(const std::vector<std::string>& params, size_t i, const char* family) {
    if (params.size() <= i) throw InvalidInput(std::string(family) + ": missing parameter");
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(params[i], &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != params[i].size()) throw ParseError(std::string(family) + ": bad number \"" + params[i] + "\"", static_cast<long>(i));
    return v;
}

// ---- commands -------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<std::string> params;
};

int cmd_gen(const RunConfig& cfg, const GenArgs& a) {
    Rng rng(cfg.seed);
    const auto& p = a.params;
    const char* fam = a.family.c_str();
    if (a.family == "window" || a.family == "nested") {
        PlaneTriangulationWindow w;
        if (a.family == "window") {
            auto v = int_params(p, 0, 2, fam);
            check_cap("gen", v[0] * v[1], cfg.cap_n);
            w = random_grid_window(v[0], v[1], rng);
        } else {
            auto v = int_params(p, 0, 1, fam);
            check_cap("gen", 3 * v[0], cfg.cap_n);
            w = nested_triangles_window(v[0]);
        }
        emit_json(cfg, window_to_json(w));
        return 0;
    }
    Graph g;
    if (a.family == "gnp") {
        auto v = int_params({p.begin(), p.begin() + std::min<size_t>(1, p.size())}, 0, 1, fam);
        check_cap("gen", v[0], cfg.cap_n);
        g = random_gnp(v[0], real_param(p, 1, fam), rng);
    } else if (a.family == "tree") {
        auto v = int_params(p, 0, 1, fam);
        check_cap("gen", v[0], cfg.cap_n);
        g = random_tree(v[0], rng);
    } else if (a.family == "ktree") {
        auto v = int_params(p, 0, 2, fam);
        check_cap("gen", v[0], cfg.cap_n);
        g = random_ktree(v[0], v[1], rng);
    } else if (a.family == "partial-ktree") {
        auto v = int_params({p.begin(), p.begin() + std::min<size_t>(2, p.size())}, 0, 2, fam);
        check_cap("gen", v[0], cfg.cap_n);
        g = random_partial_ktree(v[0], v[1], real_param(p, 2, fam), rng);
    } else if (a.family == "tk") {
        auto v = int_params(p, 0, 3, fam);
        TkTruncation t;
        t.k = v[0];
        t.params = TruncationParams{v[1], v[2], v.size() > 3 ? v[3] : 1};
        long long nodes = t.node_count(cfg.cap_n);
        if (nodes < 0) throw SizeCapError("gen tk", cfg.cap_n + 1, cfg.cap_n);
        g = tk_trunc(t.k, t.params, cfg.cap_n).graph;
    } else if (a.family == "rk") {
        auto v = int_params(p, 0, 2, fam);
        g = rk_trunc(v[0], v[1]).graph;
    } else if (a.family == "sk") {
        auto v = int_params(p, 0, 2, fam);
        g = sk_trunc(v[0], v[1], rng, v.size() > 2 ? v[2] : 2).graph;
    } else {
        g = build_named(a.family, int_params(p, 0, 0, fam));
    }
    check_cap("gen", g.n(), cfg.cap_n);
    emit_graph_out(cfg, g);
    return 0;
}

struct TwArgs {
    std::string input;
    bool heuristic = false;
    bool with_td = false;
};

int cmd_tw(const RunConfig& cfg, const TwArgs& a) {
    Graph g = load_graph(cfg, a.input);
    auto res = a.heuristic ? heuristic_treewidth(g) : exact_treewidth(g);
    Json j{{"treewidth", res.width}};
    if (a.heuristic) j["heuristic"] = true;
    if (a.with_td) j["td"] = td_to_json(res.td);
    emit_json(cfg, j);
    return 0;
}

struct StwArgs {
    std::string input;
    int k = -1;
};

// Simple treewidth as the least k admitting a chordal completion with no
// K_{k+2} and no W_k.
int cmd_stw(const RunConfig& cfg, const StwArgs& a) {
    Graph g = load_graph(cfg, a.input);
    Json j;
    if (a.k >= 0) {
        auto c = chordal_completion_exact(g, a.k, true);
        j = Json{{"k", a.k}, {"within", c.has_value()}};
        if (c) j["completion"] = graph_to_json(*c);
        emit_json(cfg, j);
        return 0;
    }
    if (g.n() == 0) {
        emit_json(cfg, Json{{"stw", -1}});
        return 0;
    }
    for (int k = 0; k < g.n(); ++k)
        if (auto c = chordal_completion_exact(g, k, true)) {
            emit_json(cfg, Json{{"stw", k}, {"completion", graph_to_json(*c)}});
            return 0;
        }
    throw std::logic_error("stw: no completion up to n-1");
}

int cmd_chordal(const RunConfig& cfg, const std::string& input) {
    Graph g = load_graph(cfg, input);
    auto res = recognize_chordal(g);
    Json j{{"chordal", res.chordal}};
    if (res.chordal) {
        j["peo"] = res.peo.order.seq;
        j["clique_tree"] = td_to_json(clique_tree(g));
        j["clique_number"] = clique_number(g);
    } else {
        j["chordless_cycle"] = res.chordless_cycle;
    }
    emit_json(cfg, j);
    return 0;
}

struct EmbedArgs {
    std::string input;
    int k = 1;
    int depth = 4;
    int mult = 2;
    int labels = 1;
};

int cmd_embed_tk(const RunConfig& cfg, const EmbedArgs& a) {
    Graph g = load_graph(cfg, a.input);
    TkTruncation t;
    t.k = a.k;
    t.params = TruncationParams{a.depth, a.mult, a.labels};
    auto res = embed_into_tk(g, a.k, t.params);
    if (res.failure) {
        const auto& f = *res.failure;
        emit_json(cfg, Json{{"embedded", false},
                            {"treewidth", res.treewidth},
                            {"failure", {{"vertex", f.vertex}, {"colour", f.colour}, {"label", f.label}, {"hint", f.hint}}}});
        return 0;
    }
    Json j = tk_embedding_to_json(t, res.map);
    j["embedded"] = true;
    j["treewidth"] = res.treewidth;
    auto bad = tk_embedding_violation(g, t, res.map);
    j["verified"] = !bad;
    emit_json(cfg, j);
    return bad ? kExitViolation : 0;
}

struct ProductArgs {
    std::string kind;
    std::string left;
    std::string right;
};

int cmd_product(const RunConfig& cfg, const ProductArgs& a) {
    ProductKind kind;
    if (a.kind == "cartesian") kind = ProductKind::cartesian;
    else if (a.kind == "direct") kind = ProductKind::direct;
    else if (a.kind == "strong") kind = ProductKind::strong;
    else throw InvalidInput("product: kind must be cartesian, direct or strong");
    Graph x = load_graph(cfg, a.left), y = load_graph(cfg, a.right);
    check_cap("product", x.n() * y.n(), cfg.cap_n);
    emit_graph_out(cfg, product(kind, x, y));
    return 0;
}

struct LayeredArgs {
    std::string input;
    std::string partition;
    int root = 0;
};

// Runs partition -> product embedding -> partition and reports whether the
// width, parts, layers and quotient relation survive.
int cmd_layered(const RunConfig& cfg, const LayeredArgs& a) {
    Graph g = load_graph(cfg, a.input);
    std::vector<VertexSet> parts;
    Layering layering;
    if (!a.partition.empty()) {
        Json pj = load_json(a.partition);
        try {
            parts = pj.at("parts").get<std::vector<VertexSet>>();
            layering.layers = pj.at("layers").get<std::vector<std::vector<int>>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("partition: ") + e.what(), 0);
        }
    } else {
        if (g.n() > 0 && (a.root < 0 || a.root >= g.n())) throw InvalidInput("layered: root out of range");
        layering = g.n() > 0 ? bfs_layering(g, {a.root}) : Layering{};
        // default parts: connected pieces of each layer
        for (const auto& layer : layering.layers) {
            std::vector<char> allowed(static_cast<size_t>(g.n()), 0);
            for (int v : layer) allowed[static_cast<size_t>(v)] = 1;
            for (auto& comp : components_within(g, allowed)) parts.push_back(comp);
        }
    }
    auto lp = make_layered_partition(g, parts, layering);
    auto e = partition_to_embedding(g, lp);
    auto back = embedding_to_partition(e.h, e.m, e.ell, g, e.coords);
    bool quotient_ok = true;
    Graph q = quotient(g, back.lp.parts);
    for (auto [x, y] : q.edges())
        quotient_ok = quotient_ok && e.h.has_edge(back.part_to_h[static_cast<size_t>(x)], back.part_to_h[static_cast<size_t>(y)]);
    bool round_trip = e.verified && back.lp.width == lp.width && back.lp.parts == lp.parts &&
                      back.lp.layering.layers == lp.layering.layers && quotient_ok;
    Json coords = Json::array();
    for (const auto& c : e.coords) coords.push_back({c.h, c.p, c.q});
    emit_json(cfg, Json{{"width", lp.width},
                        {"parts", lp.parts},
                        {"layers", lp.layering.layers},
                        {"quotient", graph_to_json(e.h)},
                        {"m", e.m},
                        {"ell", e.ell},
                        {"coords", coords},
                        {"round_trip", round_trip}});
    return round_trip ? 0 : kExitViolation;
}

struct ColrArgs {
    std::string input;
    int r = 1;
    std::string method = "auto";
    bool with_order = false;
};

int cmd_colr(const RunConfig& cfg, const ColrArgs& a) {
    Graph g = load_graph(cfg, a.input);
    bool exact = a.method == "exact" || (a.method == "auto" && g.n() <= 9);
    if (a.method != "auto" && a.method != "exact" && a.method != "heuristic")
        throw InvalidInput("colr: method must be auto, exact or heuristic");
    auto res = exact ? col_r_exact(g, a.r) : col_r_heuristic(g, a.r);
    Json j{{"value", res.value}, {"r", a.r}, {"exact", exact}};
    if (a.with_order) j["order"] = res.order.seq;
    emit_json(cfg, j);
    return 0;
}

struct PartitionArgs {
    std::string input;
    int t = 5;
    std::vector<int> radii;
};

int cmd_partition_kt(const RunConfig& cfg, const PartitionArgs& a) {
    Graph g = load_graph(cfg, a.input);
    auto out = chordal_partition_kt(g, a.t);
    if (out.refutation) {
        emit_json(cfg, Json{{"t", a.t}, {"refutation", {{"model", out.refutation->model}}}});
        return kExitViolation;
    }
    const auto& cert = *out.cert;
    Json j = cert_to_json(cert);
    if (auto bad = verify_cert(g, cert, a.t)) {
        j["violation"] = cert_violation_to_json(*bad);
        emit_json(cfg, j);
        return kExitViolation;
    }
    bool within = true;
    if (!a.radii.empty()) {
        Json col = Json::array();
        for (int r : a.radii) {
            auto pc = partition_order_colr(g, cert, r);
            col.push_back({{"r", r}, {"value", pc.result.value}, {"bound", pc.bound}, {"within_bound", pc.within_bound}});
            within = within && pc.within_bound;
        }
        j["colr"] = col;
    }
    emit_json(cfg, j);
    return within ? 0 : kExitViolation;
}

struct RouteArgs {
    int ell = 3;
    int m = 1;
    std::vector<int> a;
    std::vector<int> b;
};

int cmd_route(const RunConfig& cfg, const RouteArgs& r) {
    auto paths = route_grid(r.ell, r.m, r.a, r.b);
    // independent check: grid steps, endpoints, vertex-disjointness
    std::vector<int> owner(static_cast<size_t>(r.ell * r.m), -1);
    bool ok = paths.size() == r.a.size();
    for (size_t i = 0; ok && i < paths.size(); ++i) {
        const auto& pth = paths[i];
        ok = !pth.empty() && pth.front() == r.a[i] * r.ell && pth.back() == r.b[i] * r.ell + r.ell - 1;
        for (size_t s = 0; ok && s < pth.size(); ++s) {
            int v = pth[s];
            ok = v >= 0 && v < r.ell * r.m && owner[static_cast<size_t>(v)] < 0;
            if (ok) owner[static_cast<size_t>(v)] = static_cast<int>(i);
            if (ok && s > 0) {
                int u = pth[s - 1];
                ok = std::abs(u / r.ell - v / r.ell) + std::abs(u % r.ell - v % r.ell) == 1;
            }
        }
    }
    emit_json(cfg, Json{{"ell", r.ell}, {"m", r.m}, {"paths", paths}, {"verified", ok}});
    return ok ? 0 : kExitViolation;
}

struct TightArgs {
    std::string input;
    int face = -1;
    int rings = -1;
};

int cmd_tight(const RunConfig& cfg, const TightArgs& a) {
    auto lw = load_window(cfg, a.input);
    const auto& w = lw.window;
    int face = a.face >= 0 ? a.face : central_face(w);
    if (face >= static_cast<int>(w.faces.size())) throw InvalidInput("tight: face out of range");
    EmbeddedCycle cur = face_cycle(w, face);
    Json rings = Json::array();
    std::string stop = "limit";
    bool all_tight = true;
    while (a.rings < 0 || static_cast<int>(rings.size()) < a.rings) {
        try {
            cur = find_tight_surrounding(w, cur);
        } catch (const BoundaryFailure& e) {
            stop = "boundary";
            std::cerr << "tight: " << e.what() << "\n";
            break;
        }
        bool tight = is_tight(w, cur);
        all_tight = all_tight && tight;
        rings.push_back({{"cycle", cur.cycle}, {"length", cur.cycle.size()}, {"tight", tight}});
    }
    emit_json(cfg, Json{{"face", face}, {"rings", rings}, {"stop", stop}});
    return all_tight ? 0 : kExitViolation;
}

struct MinorArgs {
    std::string input;
    int p = 4;
    int random_jumps = -1;
    int min_dist = 6;
    int margin = 4;
};

int cmd_minor_jumps(const RunConfig& cfg, const MinorArgs& a) {
    auto lw = load_window(cfg, a.input);
    std::vector<Edge> jumps = lw.jumps;
    if (a.random_jumps >= 0) {
        Rng rng(cfg.seed);
        jumps = random_interior_jumps(lw.window, a.random_jumps, a.min_dist, a.margin, rng);
    }
    auto res = clique_minor_with_jumps(lw.window, jumps, a.p);
    Json j{{"p", a.p}, {"jumps", Json::array()}, {"found", res.model.has_value()}};
    for (auto [u, v] : jumps) j["jumps"].push_back({u, v});
    if (res.model) {
        j["model"] = *res.model;
        j["rings_used"] = res.rings_used;
        j["jumps_used"] = res.jumps_used;
    } else {
        j["failed_stage"] = res.failed_stage;
        j["detail"] = res.detail;
    }
    emit_json(cfg, j);
    return 0;
}

struct ValidateArgs {
    std::string kind;
    std::string graph;
    std::string artifact;
};

int cmd_validate(const RunConfig& cfg, const ValidateArgs& a) {
    Graph g = load_graph(cfg, a.graph);
    Json art = load_json(a.artifact);
    Json j{{"kind", a.kind}};
    bool valid = false;
    if (a.kind == "td") {
        // accept a bare decomposition or a command result holding one under "td"
        auto td = td_from_json(art.contains("td") ? art["td"] : art);
        auto bad = validate(td, g);
        valid = !bad;
        if (bad) j["violation"] = td_violation_to_json(*bad);
        else j["width"] = td.width();
    } else if (a.kind == "cert") {
        auto cert = cert_from_json(art);
        auto bad = verify_cert(g, cert, cert.t);
        valid = !bad;
        if (bad) j["violation"] = cert_violation_to_json(*bad);
    } else if (a.kind == "embedding") {
        auto [t, map] = tk_embedding_from_json(art);
        auto bad = tk_embedding_violation(g, t, map);
        valid = !bad;
        if (bad) j["violation"] = Json{{"kind", bad->kind}, {"u", bad->u}, {"v", bad->v}, {"message", bad->message}};
    } else {
        throw InvalidInput("validate: kind must be td, cert or embedding");
    }
    j["valid"] = valid;
    emit_json(cfg, j);
    return valid ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sg: structural graph theory toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "seed for every random choice")->envname("SG_SEED");
    app.add_option("--cap-n", cfg.cap_n, "largest accepted vertex count")->envname("SG_CAP_N");
    app.add_option("--format", cfg.format, "graph output format")
        ->check(CLI::IsMember({"json", "edgelist", "graph6", "dot"}))
        ->envname("SG_FORMAT");
    app.add_option("--input-format", cfg.input_format, "graph input format")
        ->check(CLI::IsMember({"auto", "json", "edgelist", "graph6"}))
        ->envname("SG_INPUT_FORMAT");
    app.add_option("--out", cfg.out, "write the result here instead of stdout")->envname("SG_OUT");

    GenArgs gen;
    auto* s_gen = app.add_subcommand("gen", "generate a graph or a triangulated window");
    s_gen->add_option("family", gen.family,
                      "K Kmn P C grid cylinder W empty star petersen gnp tree ktree partial-ktree tk rk sk window nested")
        ->required();
    s_gen->add_option("params", gen.params, "family parameters");

    TwArgs tw;
    auto* s_tw = app.add_subcommand("tw", "treewidth (exact up to 16 vertices)");
    s_tw->add_option("input", tw.input)->required();
    s_tw->add_flag("--heuristic", tw.heuristic, "min-fill upper bound instead of the exact value");
    s_tw->add_flag("--td", tw.with_td, "include the decomposition");

    StwArgs stw;
    auto* s_stw = app.add_subcommand("stw", "simple treewidth (exact up to 12 vertices)");
    s_stw->add_option("input", stw.input)->required();
    s_stw->add_option("--k", stw.k, "only decide stw <= k");

    std::string chordal_input;
    auto* s_chordal = app.add_subcommand("chordal", "chordality with a perfect elimination order or a chordless cycle");
    s_chordal->add_option("input", chordal_input)->required();

    EmbedArgs emb;
    auto* s_emb = app.add_subcommand("embed-tk", "embed into a truncated universal treewidth-k graph");
    s_emb->add_option("input", emb.input)->required();
    s_emb->add_option("--k", emb.k)->required();
    s_emb->add_option("--depth", emb.depth);
    s_emb->add_option("--mult", emb.mult);
    s_emb->add_option("--labels", emb.labels);

    ProductArgs prod;
    auto* s_prod = app.add_subcommand("product", "cartesian, direct or strong product of two graphs");
    s_prod->add_option("kind", prod.kind)->required();
    s_prod->add_option("left", prod.left)->required();
    s_prod->add_option("right", prod.right)->required();

    LayeredArgs lay;
    auto* s_lay = app.add_subcommand("layered", "layered partition to product embedding and back");
    s_lay->add_option("input", lay.input)->required();
    s_lay->add_option("--partition", lay.partition, "JSON with \"parts\" and \"layers\"");
    s_lay->add_option("--root", lay.root, "BFS root of the default layering");

    ColrArgs colr;
    auto* s_colr = app.add_subcommand("colr", "r-th generalized colouring number");
    s_colr->add_option("input", colr.input)->required();
    s_colr->add_option("--r", colr.r)->required();
    s_colr->add_option("--method", colr.method, "auto, exact or heuristic");
    s_colr->add_flag("--order", colr.with_order, "include the order");

    PartitionArgs part;
    auto* s_part = app.add_subcommand("partition-kt", "certified chordal partition of a K_t-minor-free graph");
    s_part->add_option("input", part.input)->required();
    s_part->add_option("--t", part.t)->required();
    s_part->add_option("--colr", part.radii, "radii for the partition order bound check")->delimiter(',');

    RouteArgs route;
    auto* s_route = app.add_subcommand("route", "disjoint left-to-right paths in a grid");
    s_route->add_option("--ell", route.ell, "number of columns")->required();
    s_route->add_option("--m", route.m, "number of rows")->required();
    s_route->add_option("--a", route.a, "start rows")->delimiter(',')->required();
    s_route->add_option("--b", route.b, "end rows")->delimiter(',')->required();

    TightArgs tight;
    auto* s_tight = app.add_subcommand("tight", "nested tight cycles around a face of a window");
    s_tight->add_option("input", tight.input)->required();
    s_tight->add_option("--face", tight.face, "start face (default: central face)");
    s_tight->add_option("--rings", tight.rings, "stop after this many rings");

    MinorArgs minor;
    auto* s_minor = app.add_subcommand("minor-jumps", "K_p model in a window plus jump edges");
    s_minor->add_option("input", minor.input)->required();
    s_minor->add_option("--p", minor.p)->required();
    s_minor->add_option("--random-jumps", minor.random_jumps, "draw this many jumps instead of the stored ones");
    s_minor->add_option("--min-dist", minor.min_dist);
    s_minor->add_option("--margin", minor.margin);

    ValidateArgs val;
    auto* s_val = app.add_subcommand("validate", "check a td, cert or embedding artifact against a graph");
    s_val->add_option("kind", val.kind)->required();
    s_val->add_option("graph", val.graph)->required();
    s_val->add_option("artifact", val.artifact)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*s_gen) return cmd_gen(cfg, gen);
        if (*s_tw) return cmd_tw(cfg, tw);
        if (*s_stw) return cmd_stw(cfg, stw);
        if (*s_chordal) return cmd_chordal(cfg, chordal_input);
        if (*s_emb) return cmd_embed_tk(cfg, emb);
        if (*s_prod) return cmd_product(cfg, prod);
        if (*s_lay) return cmd_layered(cfg, lay);
        if (*s_colr) return cmd_colr(cfg, colr);
        if (*s_part) return cmd_partition_kt(cfg, part);
        if (*s_route) return cmd_route(cfg, route);
        if (*s_tight) return cmd_tight(cfg, tight);
        if (*s_minor) return cmd_minor_jumps(cfg, minor);
        if (*s_val) return cmd_validate(cfg, val);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}
