#include "sg/io.hpp"

#include <json.hpp>
#include <sstream>

namespace sg {

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    int declared = -1, maxid = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') {
            std::string key;
            long n;
            if (ls >> key && key == "n" && ls >> n) {
                if (n < 0) throw ParseError("negative vertex count", lineno);
                declared = static_cast<int>(n);
            }
            continue;
        }
        std::istringstream row(line);
        long u, v;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) throw ParseError("expected \"u v\"", lineno);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxid = std::max<int>(maxid, static_cast<int>(std::max(u, v)));
    }
    int n = declared >= 0 ? declared : maxid + 1;
    if (maxid >= n) throw ParseError("vertex id exceeds declared n", lineno);
    return Graph(n, edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "# n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph6(const std::string& raw) {
    std::string s = raw;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("empty graph6 string", 0);
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] < 63 || s[i] > 126) throw ParseError("byte outside graph6 range", static_cast<long>(i));
    int n = s[0] - 63;
    if (n > 62) throw ParseError("graph6 size prefix above 62 unsupported", 0);
    size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
    size_t need = (bits + 5) / 6;
    if (s.size() != 1 + need) throw ParseError("graph6 length mismatch", static_cast<long>(s.size()));
    Graph g(n);
    size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int byte = s[1 + k / 6] - 63;
            if (byte >> (5 - static_cast<int>(k % 6)) & 1) g.add_edge(u, v);
        }
    // trailing padding bits must be zero
    for (; k < need * 6; ++k)
        if ((s[1 + k / 6] - 63) >> (5 - static_cast<int>(k % 6)) & 1)
            throw ParseError("nonzero graph6 padding", static_cast<long>(1 + k / 6));
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.n();
    check_cap("emit_graph6", n, 62);
    std::string s(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                s += static_cast<char>(acc + 63);
                acc = nbits = 0;
            }
        }
    if (nbits) s += static_cast<char>((acc << (6 - nbits)) + 63);
    return s;
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), static_cast<long>(e.byte));
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("json graph needs integer \"n\"", 0);
    int n = j["n"].get<int>();
    if (n < 0) throw ParseError("negative vertex count", 0);
    Graph g(n);
    if (j.contains("edges")) {
        long idx = 0;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("edge must be [u, v]", idx);
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("bad edge endpoints", idx);
            g.add_edge(u, v);
            ++idx;
        }
    }
    return g;
}

std::string emit_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

std::string emit_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "edgelist") return parse_edgelist(text);
    if (format == "graph6") return parse_graph6(text);
    if (format == "json") return parse_graph_json(text);
    throw InvalidInput("cannot parse format '" + format + "'");
}

std::string emit_graph(const Graph& g, const std::string& format) {
    if (format == "edgelist") return emit_edgelist(g);
    if (format == "graph6") return emit_graph6(g) + "\n";
    if (format == "json") return emit_graph_json(g) + "\n";
    if (format == "dot") return emit_dot(g);
    throw InvalidInput("unknown format '" + format + "'");
}

}  // namespace sg
