#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "sg/graph.hpp"
#include "sg/generators.hpp"

namespace sg {

// k vertex-disjoint paths in the grid with `ell` columns of `m` vertices each
// (vertex (row, col) is row*ell + col). Path i runs from row a[i] of the first
// column to row b[i] of the last. Both lists must be strictly increasing rows
// (top to bottom) and ell >= 2k+1; otherwise InvalidInput. The topmost pair is
// routed first, from the left when b[0] <= a[0] and from the right otherwise,
// and the remaining pairs shift two columns inwards.
std::vector<std::vector<int>> route_grid(int ell, int m, const std::vector<int>& a, const std::vector<int>& b);

// A plane near-triangulation: bounded faces are triangles listed
// counter-clockwise, the outer face is bounded by `outer_cycle` (also
// counter-clockwise, so the bounded faces lie on its left).
struct PlaneTriangulationWindow {
    Graph graph;
    std::vector<std::vector<int>> rotation;  // counter-clockwise neighbour order
    std::vector<std::array<int, 3>> faces;
    std::vector<int> outer_cycle;
    int rows = 0;            // grid windows only
    int cols = 0;
    std::vector<char> diag;  // per square, row-major: 1 joins top-left to bottom-right
};

// Builds graph and rotation from counter-clockwise triangles. Throws
// InvalidInput when the result fails check_window.
PlaneTriangulationWindow window_from_faces(int n, const std::vector<std::array<int, 3>>& faces,
                                           const std::vector<int>& outer_cycle);
// rows x cols grid (vertex r*cols + c) with one diagonal per square.
PlaneTriangulationWindow grid_window(int rows, int cols, const std::vector<char>& diag);
PlaneTriangulationWindow random_grid_window(int rows, int cols, Rng& rng);
// k concentric ell-gons, ring i on vertices ell*i..ell*i+ell-1, joined by
// 2*ell faces between consecutive rings; the innermost polygon is split by a
// fan from vertex 0, so for ell = 3 it is face 0.
PlaneTriangulationWindow nested_polygons_window(int ell, int k);
PlaneTriangulationWindow nested_triangles_window(int k);

// Euler count, triangular faces, every directed edge in at most one face,
// rotation consistent with the faces, a wheel around every interior vertex
// and a path of faces around every boundary vertex.
std::optional<std::string> check_window(const PlaneTriangulationWindow& w);

// A cycle stored counter-clockwise with its closed disk: the faces inside and
// the vertices strictly inside, found by a traversal of the dual graph that
// does not cross the cycle.
struct EmbeddedCycle {
    std::vector<int> cycle;
    VertexSet interior;
    std::vector<int> inside_faces;  // indices into w.faces, sorted
};

// Validates a simple cycle of length >= 3 in w.graph and orients it.
EmbeddedCycle make_cycle(const PlaneTriangulationWindow& w, const std::vector<int>& cycle);
EmbeddedCycle face_cycle(const PlaneTriangulationWindow& w, int face);
// The face whose vertices are farthest from the outer cycle (ties: lowest index).
int central_face(const PlaneTriangulationWindow& w);

// Δ(inner) ⊆ Δ(outer) as face sets.
bool disk_contains(const EmbeddedCycle& outer, const EmbeddedCycle& inner);
// Vertex-disjoint and Δ(inner) ⊆ Δ(outer).
bool surrounds(const EmbeddedCycle& outer, const EmbeddedCycle& inner);

// A shortest cycle D of w with Δ(c) ⊆ Δ(D); with `disjoint` D must also avoid
// V(c). Computed exactly as a shortest closed walk crossing a fixed dual path
// from inside c to the outer face an odd number of times.
std::optional<EmbeddedCycle> shortest_enclosing_cycle(const PlaneTriangulationWindow& w, const EmbeddedCycle& c,
                                                      bool disjoint);
// No cycle of the window with fewer vertices has a disk containing Δ(c).
bool is_tight(const PlaneTriangulationWindow& w, const EmbeddedCycle& c);

struct BoundaryFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A shortest cycle surrounding c; it is tight. Throws BoundaryFailure when no
// surrounding cycle exists or the shortest one touches the outer cycle.
EmbeddedCycle find_tight_surrounding(const PlaneTriangulationWindow& w, const EmbeddedCycle& c);

// Thrown when fewer than |V(c)| disjoint paths exist; `cut` is a minimum
// vertex cut between the cycles.
struct MengerCut : std::runtime_error {
    MengerCut(const std::string& what, VertexSet cut) : std::runtime_error(what), cut(std::move(cut)) {}
    VertexSet cut;
};

// |V(c)| vertex-disjoint paths from V(c) to V(d) inside Δ(d) minus the
// interior of c, one starting at each vertex of c (in cycle order). Each path
// meets c and d only at its ends. Minimum total length among such systems.
// Throws InvalidInput unless Δ(c) ⊆ Δ(d), MengerCut when the flow is short.
std::vector<std::vector<int>> menger_between_cycles(const PlaneTriangulationWindow& w, const EmbeddedCycle& c,
                                                    const EmbeddedCycle& d);

// Subdivision of C_ell □ P_m: branch[i][j] is column j on cycle i,
// radial[i][j] joins branch[i][j] to branch[i+1][j], arcs[i][j] follows cycle
// i from branch[i][j] to branch[i][j+1 mod ell].
struct CylindricalSubdivision {
    int ell = 0;
    int m = 0;
    std::vector<std::vector<int>> branch;
    std::vector<std::vector<std::vector<int>>> radial;
    std::vector<std::vector<std::vector<int>>> arcs;
};

// Nested cycles, each tight and surrounded by the next. Throws InvalidInput on
// a violated precondition and MengerCut from the path systems.
CylindricalSubdivision cylindrical_subdivision(const PlaneTriangulationWindow& w, const std::vector<EmbeddedCycle>& cycles);

// Edges present in g, paths internally disjoint from everything else, and the
// contracted graph equal to C_ell □ P_m (cylinder numbering j*m + i) under the
// branch map. Returns the first violation.
std::optional<std::string> verify_subdivision(const Graph& g, const CylindricalSubdivision& s);

// Disjoint p1-p2 and q1-q2 paths in g (plus the optional edge), or nothing.
// Exhaustive over vertex sets of the first path. n <= 16.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_disjoint_paths_small(
    const Graph& g, int p1, int p2, int q1, int q2, std::optional<Edge> extra_edge = std::nullopt);

struct CliqueMinorResult {
    std::optional<std::vector<VertexSet>> model;  // branch sets in the window plus jumps
    std::string failed_stage;                     // "rings", "rays", "switch" when model is empty
    std::string detail;
    int rings_used = 0;
    int jumps_used = 0;
};

// Up to `count` jumps with pairwise distinct ends, each end at least `margin`
// steps from the outer cycle and the two ends at distance >= min_dist in the
// window, drawn by rejection sampling.
std::vector<Edge> random_interior_jumps(const PlaneTriangulationWindow& w, int count, int min_dist, int margin, Rng& rng);

// The window plus the jump edges.
Graph graph_with_jumps(const PlaneTriangulationWindow& w, const std::vector<Edge>& jumps);

// Rays start on the first tight ring around the central face with at least p
// vertices and are extended ring by ring with Menger paths; rays consecutive on
// a ring are linked along it. Pairs never consecutive are brought together by
// switch steps, each sending one ray through a jump whose ends lie strictly
// between two rings. The model is checked with is_clique_model before it is
// returned.
CliqueMinorResult clique_minor_with_jumps(const PlaneTriangulationWindow& w, const std::vector<Edge>& jumps, int p);

}  // namespace sg
