#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sg/colnum.hpp"

namespace sg {

// Geodesics from `root` that pairwise meet only at the root, their union, and
// a vertex order witnessing the bandwidth bound on the induced subgraph.
struct Connector {
    int root = -1;
    std::vector<std::vector<int>> paths;  // each starts at root
    VertexSet vertices;
    std::vector<int> witness_order;       // a permutation of vertices
};

// Thrown when no verified connector is found; `property` names the last
// failing check.
struct ConnectorFailure : std::runtime_error {
    ConnectorFailure(const std::string& property, const std::string& detail)
        : std::runtime_error("connector: " + property + ": " + detail), property(property) {}
    std::string property;
};

// Checks the connector properties with bounds for an ell-connector: at most
// ell-1 geodesics, bandwidth <= ell-1 under the witness order, every other
// vertex with at most 2*ell-2 neighbours in the union. Returns the violated
// property, if any.
std::optional<std::string> check_connector(const Graph& g, const VertexSet& s, const Connector& c, int ell);

// Backtracking over target orders and geodesic choices avoiding earlier paths,
// each candidate verified by check_connector. ell = 0 means |s|. The search is
// exhaustive unless `budget` expansions run out. Throws ConnectorFailure.
Connector s_connector(const Graph& g, const VertexSet& s, int root, int ell = 0, long budget = 200000);

struct CertPart {
    VertexSet vertices;
    int parent = -1;  // part index; -1 for the root part
    int colour = 0;   // 0..t-2
    int depth = 0;    // distance to the root part in the tree
    int root = -1;    // connector root
    std::vector<int> witness_order;
    int label = 0;    // index of the part's coordinate graph among those of the same depth
};

struct ChordalPartitionCert {
    int t = 0;
    std::vector<CertPart> parts;             // part 0 is the root part {0}
    std::vector<int> part_of;                // per vertex
    std::vector<std::vector<int>> coords;    // per vertex: distances v_0..v_depth
    std::vector<int> star;                   // per vertex: 0 for a part root, else its path 1..t-2
    std::vector<Edge> quotient_edges;        // (ancestor part, descendant part), sorted
    std::vector<int> edge_label;             // per quotient edge
};

// Branch sets of a K_t model found while partitioning.
struct KtRefutation {
    std::vector<VertexSet> model;
};

struct PartitionOutcome {
    std::optional<ChordalPartitionCert> cert;
    std::optional<KtRefutation> refutation;
};

// Connected chordal partition of a connected graph built part by part: the
// part holding the least unfinished vertex u is replaced by a connector
// towards its neighbouring parts plus the leftover components. The connector
// is rooted at u when some choice of one vertex per neighbouring part allows
// it, else at the first other vertex of the part that does. A K_t model
// encountered on the way is returned as a refutation. Throws ConnectorFailure.
PartitionOutcome chordal_partition_kt(const Graph& g, int t);

struct CertViolation {
    std::string rule;
    int part = -1;
    int vertex = -1;
    std::string message;
};

std::optional<CertViolation> verify_cert(const Graph& g, const ChordalPartitionCert& cert, int t);

struct PartitionColr {
    ColResult result;
    int bound = 0;  // (t-2)(t-1)(2r+1)
    bool within_bound = false;
};

// Parts in tree order (by depth), vertices within a part by (distance from
// the part root, path). Throws InvalidInput on an unverified certificate.
PartitionColr partition_order_colr(const Graph& g, const ChordalPartitionCert& cert, int r);

// Disjoint, connected, pairwise adjacent branch sets.
bool is_clique_model(const Graph& g, const std::vector<VertexSet>& branch_sets);

// Exhaustive deletion/contraction search with memoization. n <= 12.
bool is_kt_minor_free_small(const Graph& g, int t);

}  // namespace sg
