#pragma once

#include <json.hpp>

#include "sg/minorfree.hpp"
#include "sg/planar_routing.hpp"
#include "sg/treedecomp.hpp"
#include "sg/universal.hpp"

namespace sg {

using Json = nlohmann::json;

// Structured artifacts carry this version; readers reject other values.
inline constexpr int kArtifactVersion = 1;

// Readers throw ParseError (position 0) naming the offending key.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"nodes": [{"id", "bag"}], "edges": [[x, y]], "root": id or null}
Json td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const Json& j);
Json td_violation_to_json(const TdViolation& v);

Json cert_to_json(const ChordalPartitionCert& cert);
ChordalPartitionCert cert_from_json(const Json& j);
Json cert_violation_to_json(const CertViolation& v);

// Grid windows are stored as rows, cols and one diagonal bit per square;
// other windows as n, faces and the outer cycle. Optional "jumps": [[u, v]].
Json window_to_json(const PlaneTriangulationWindow& w, const std::vector<Edge>& jumps = {});
PlaneTriangulationWindow window_from_json(const Json& j);
std::vector<Edge> jumps_from_json(const Json& j);
// True when j looks like a stored window rather than a plain graph.
bool is_window_json(const Json& j);

// {"k", "depth", "mult", "labels", "map": ["[0,2]", ...]}
Json tk_embedding_to_json(const TkTruncation& t, const std::vector<Address>& map);
std::pair<TkTruncation, std::vector<Address>> tk_embedding_from_json(const Json& j);

Json parse_json_text(const std::string& text);

}  // namespace sg
