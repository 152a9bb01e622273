#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tischler/tischler_graph.hpp"

namespace tischler {

// Unbounded plane tree with >= 3 unbounded edges: the Tischler graph of a
// critically fixed anti-polynomial with the vertex at infinity removed.
// rotation[v] lists the slots at internal vertex v in counterclockwise
// order: a bounded edge index, or kUnboundedSlot for an unbounded edge.
struct TischlerTree {
    static constexpr int kUnboundedSlot = -1;

    std::vector<int> multiplicities;                 // m_v = total degree - 2
    std::vector<std::pair<int, int>> bounded_edges;  // internal vertex pairs
    std::vector<std::vector<int>> rotation;

    int vertex_count() const { return static_cast<int>(rotation.size()); }
    int unbounded_count() const;
    int unbounded_count_at(int v) const;
    int degree() const;  // of the realizing anti-polynomial: sum(m) + 1
};

// nullopt when well formed, otherwise a description of the first defect.
std::optional<std::string> tree_defect(const TischlerTree& t);

// One-point compactification: a new vertex absorbs all unbounded slots in
// their cyclic order at infinity. Always validates and is unobstructed.
TischlerGraph from_tree(const TischlerTree& t);

// Inverse of from_tree: delete v, turning its incident edges into unbounded
// slots. Succeeds iff deg(v) equals the face count, i.e. the graph is
// anti-polynomial with v the vertex at infinity; such graphs are
// unobstructed without running the face-pair scan. Throws on a bad vertex id.
std::optional<TischlerTree> to_tree(const TischlerGraph& t, int v);

// True iff some vertex has degree equal to the face count.
bool is_antipolynomial(const TischlerGraph& t);

// Canonical form with the infinity vertex marked: codes are equal iff the
// trees are equivalent as plane trees (orientation-preserving homeomorphism
// of the plane); EitherOrientation also allows reflection.
std::string tree_code(const TischlerTree& t, CodeMode mode);

// Text format, one line per internal vertex:
//   T <v>: e<k> * e<j> ...    slots counterclockwise; '*' is unbounded
TischlerTree parse_tree(std::string_view text);
std::string to_tree_text(const TischlerTree& t);

}  // namespace tischler
