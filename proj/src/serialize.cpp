#include "sg/serialize.hpp"

#include <algorithm>

#include "sg/io.hpp"

namespace sg {

namespace {

const Json& need(const Json& j, const char* what, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"", 0);
    return j.at(key);
}

void check_version(const Json& j, const char* what) {
    int v = need(j, what, "version").get<int>();
    if (v != kArtifactVersion)
        throw ParseError(std::string(what) + ": unsupported version " + std::to_string(v), 0);
}

// Runs a reader and turns json type errors into ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what(), 0);
    }
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json a = Json::array();
    for (auto [u, v] : edges) a.push_back({u, v});
    return a;
}

std::vector<Edge> edges_from_json(const Json& a, const char* what) {
    std::vector<Edge> out;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 2) throw ParseError(std::string(what) + ": pair expected", 0);
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), static_cast<long>(e.byte));
    }
}

Json graph_to_json(const Graph& g) {
    return Json{{"n", g.n()}, {"edges", edges_to_json(g.edges())}};
}

Graph graph_from_json(const Json& j) { return parse_graph_json(j.dump()); }

Json td_to_json(const TreeDecomposition& td) {
    Json nodes = Json::array();
    for (int x = 0; x < td.num_nodes(); ++x) nodes.push_back({{"id", x}, {"bag", td.bags[static_cast<size_t>(x)]}});
    Json j{{"nodes", nodes}, {"edges", edges_to_json(td.edges)}};
    j["root"] = td.root ? Json(*td.root) : Json(nullptr);
    return j;
}

TreeDecomposition td_from_json(const Json& j) {
    return guarded("td", [&] {
        TreeDecomposition td;
        const Json& nodes = need(j, "td", "nodes");
        td.bags.resize(nodes.size());
        std::vector<char> seen(nodes.size(), 0);
        for (const auto& node : nodes) {
            int id = need(node, "td node", "id").get<int>();
            if (id < 0 || id >= static_cast<int>(nodes.size()) || seen[static_cast<size_t>(id)])
                throw ParseError("td: node ids must be 0..nodes-1 without repeats", 0);
            seen[static_cast<size_t>(id)] = 1;
            auto bag = need(node, "td node", "bag").get<VertexSet>();
            std::sort(bag.begin(), bag.end());
            td.bags[static_cast<size_t>(id)] = bag;
        }
        td.edges = edges_from_json(need(j, "td", "edges"), "td edges");
        if (j.contains("root") && !j["root"].is_null()) td.root = j["root"].get<int>();
        return td;
    });
}

Json td_violation_to_json(const TdViolation& v) {
    return Json{{"kind", v.kind},       {"node", v.node},         {"vertex", v.vertex},
                {"edge", {v.edge.first, v.edge.second}}, {"message", v.message}};
}

Json cert_to_json(const ChordalPartitionCert& cert) {
    Json parts = Json::array();
    for (const auto& p : cert.parts)
        parts.push_back({{"vertices", p.vertices},
                         {"parent", p.parent},
                         {"colour", p.colour},
                         {"depth", p.depth},
                         {"root", p.root},
                         {"witness_order", p.witness_order},
                         {"label", p.label}});
    return Json{{"version", kArtifactVersion},
                {"t", cert.t},
                {"parts", parts},
                {"part_of", cert.part_of},
                {"coords", cert.coords},
                {"star", cert.star},
                {"quotient_edges", edges_to_json(cert.quotient_edges)},
                {"edge_label", cert.edge_label}};
}

ChordalPartitionCert cert_from_json(const Json& j) {
    return guarded("cert", [&] {
        check_version(j, "cert");
        ChordalPartitionCert cert;
        cert.t = need(j, "cert", "t").get<int>();
        for (const auto& p : need(j, "cert", "parts")) {
            CertPart part;
            part.vertices = need(p, "cert part", "vertices").get<VertexSet>();
            part.parent = need(p, "cert part", "parent").get<int>();
            part.colour = need(p, "cert part", "colour").get<int>();
            part.depth = need(p, "cert part", "depth").get<int>();
            part.root = need(p, "cert part", "root").get<int>();
            part.witness_order = need(p, "cert part", "witness_order").get<std::vector<int>>();
            part.label = need(p, "cert part", "label").get<int>();
            cert.parts.push_back(std::move(part));
        }
        cert.part_of = need(j, "cert", "part_of").get<std::vector<int>>();
        cert.coords = need(j, "cert", "coords").get<std::vector<std::vector<int>>>();
        cert.star = need(j, "cert", "star").get<std::vector<int>>();
        cert.quotient_edges = edges_from_json(need(j, "cert", "quotient_edges"), "cert quotient_edges");
        cert.edge_label = need(j, "cert", "edge_label").get<std::vector<int>>();
        return cert;
    });
}

Json cert_violation_to_json(const CertViolation& v) {
    return Json{{"rule", v.rule}, {"part", v.part}, {"vertex", v.vertex}, {"message", v.message}};
}

Json window_to_json(const PlaneTriangulationWindow& w, const std::vector<Edge>& jumps) {
    Json j{{"version", kArtifactVersion}};
    if (w.rows > 0) {
        j["kind"] = "grid";
        j["rows"] = w.rows;
        j["cols"] = w.cols;
        std::vector<int> bits(w.diag.begin(), w.diag.end());
        j["diag"] = bits;
    } else {
        j["kind"] = "faces";
        j["n"] = w.graph.n();
        Json faces = Json::array();
        for (const auto& f : w.faces) faces.push_back({f[0], f[1], f[2]});
        j["faces"] = faces;
        j["outer"] = w.outer_cycle;
    }
    if (!jumps.empty()) j["jumps"] = edges_to_json(jumps);
    return j;
}

PlaneTriangulationWindow window_from_json(const Json& j) {
    return guarded("window", [&] {
        check_version(j, "window");
        std::string kind = need(j, "window", "kind").get<std::string>();
        if (kind == "grid") {
            std::vector<char> diag;
            for (int b : need(j, "window", "diag").get<std::vector<int>>()) {
                if (b != 0 && b != 1) throw ParseError("window: diagonal bits must be 0 or 1", 0);
                diag.push_back(static_cast<char>(b));
            }
            return grid_window(need(j, "window", "rows").get<int>(), need(j, "window", "cols").get<int>(), diag);
        }
        if (kind != "faces") throw ParseError("window: unknown kind \"" + kind + "\"", 0);
        std::vector<std::array<int, 3>> faces;
        for (const auto& f : need(j, "window", "faces")) {
            if (!f.is_array() || f.size() != 3) throw ParseError("window: faces are triples", 0);
            faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
        }
        return window_from_faces(need(j, "window", "n").get<int>(), faces,
                                 need(j, "window", "outer").get<std::vector<int>>());
    });
}

std::vector<Edge> jumps_from_json(const Json& j) {
    if (!j.contains("jumps")) return {};
    return guarded("jumps", [&] { return edges_from_json(j["jumps"], "jumps"); });
}

bool is_window_json(const Json& j) { return j.is_object() && j.contains("kind") && !j.contains("edges"); }

Json tk_embedding_to_json(const TkTruncation& t, const std::vector<Address>& map) {
    std::vector<std::string> addr;
    for (const auto& a : map) addr.push_back(address_to_string(a));
    return Json{{"version", kArtifactVersion},
                {"k", t.k},
                {"depth", t.params.depth},
                {"mult", t.params.mult},
                {"labels", t.params.labels},
                {"map", addr}};
}

std::pair<TkTruncation, std::vector<Address>> tk_embedding_from_json(const Json& j) {
    return guarded("embedding", [&] {
        check_version(j, "embedding");
        TkTruncation t;
        t.k = need(j, "embedding", "k").get<int>();
        t.params.depth = need(j, "embedding", "depth").get<int>();
        t.params.mult = need(j, "embedding", "mult").get<int>();
        t.params.labels = need(j, "embedding", "labels").get<int>();
        std::vector<Address> map;
        for (const auto& s : need(j, "embedding", "map")) {
            try {
                map.push_back(parse_address(s.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("embedding: bad address: ") + e.what(), 0);
            }
        }
        return std::pair{t, map};
    });
}

}  // namespace sg
