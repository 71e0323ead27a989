#pragma once

#include <string>

#include "sg/graph.hpp"

namespace sg {

// Edge list: one "u v" pair per line, 0-based. Lines starting with '#' are
// comments, except "# n N" which fixes the vertex count (isolated vertices
// survive a round trip). Without it n = max id + 1.
Graph parse_edgelist(const std::string& text);
std::string emit_edgelist(const Graph& g);

// graph6, n <= 62 (single-byte size prefix).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// {"n": N, "edges": [[u, v], ...]}
Graph parse_graph_json(const std::string& text);
std::string emit_graph_json(const Graph& g);

std::string emit_dot(const Graph& g);

// Picks a parser from the format name: edgelist, graph6, json.
Graph parse_graph(const std::string& text, const std::string& format);
std::string emit_graph(const Graph& g, const std::string& format);

}  // namespace sg
