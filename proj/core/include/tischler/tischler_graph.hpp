#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tischler/rotation_graph.hpp"

namespace tischler {

// Sorted multiplicities m_i = deg(v_i) - 2 of the vertices, largest first.
struct BranchingData {
    std::vector<int> multiplicities;

    int sum() const;
    bool operator==(const BranchingData&) const = default;
    bool operator<(const BranchingData& o) const { return multiplicities < o.multiplicities; }
    std::string str() const;  // "(2,1,1)"
};

struct Violation {
    enum Kind { Disconnected, LowDegree, Loop, FaceNotJordan } kind;
    int vertex = -1;  // LowDegree, Loop
    int face = -1;    // FaceNotJordan
    int repeated_vertex = -1;
    int repeated_edge = -1;
    std::string message;
};

// Two distinct faces sharing two distinct boundary edges; the certificate
// that the associated Schottky map is obstructed.
struct ObstructionWitness {
    int face_a, face_b;
    int edge_a, edge_b;
};

// Connected plane graph, all vertex degrees >= 3, no loops, every face a
// Jordan domain. The reduced model: repelling vertices are suppressed.
struct TischlerGraph {
    PlaneGraph graph;
    int degree;  // d = F - 1
    BranchingData branching;

    TischlerGraph(PlaneGraph g, int d, BranchingData b)
        : graph(std::move(g)), degree(d), branching(std::move(b)) {}

    const std::vector<FaceWalk>& faces() const { return graph.faces(); }
    bool is_hyperbolic() const { return graph.vertex_count() >= 3; }
};

struct ValidationResult {
    std::optional<TischlerGraph> value;
    std::vector<Violation> violations;  // complete list when invalid
    bool ok() const { return value.has_value(); }
};

ValidationResult validate(const PlaneGraph& g);

BranchingData branching_data(const TischlerGraph& t);

// Witness with the lexicographically least (face_a, face_b, edge_a, edge_b),
// or nullopt when every pair of faces shares at most one edge.
std::optional<ObstructionWitness> is_obstructed(const TischlerGraph& t);

// The full bipartite graph: one new degree-2 vertex in the middle of every
// edge. Face count stays d + 1.
PlaneGraph expand_full(const TischlerGraph& t);

bool is_bipartite(const PlaneGraph& g);

// JSON object {canonical_code, degree, branching, obstructed, witness?}.
std::string to_json(const TischlerGraph& t);

}  // namespace tischler
