#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tischler {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One face boundary circuit. `darts` walks the boundary with the face on the
// left; dart i points from vertices()[i] to vertices()[i+1].
struct FaceWalk {
    std::vector<int> darts;
    std::vector<int> vertices;  // vertex_of(darts[i])
    std::vector<int> edges;     // edge_of(darts[i])
};

// Finite plane multigraph on the sphere, stored as a rotation system:
// darts 0..2E-1, `alpha` the fixed-point-free involution pairing the two
// darts of each edge, `sigma` the next dart counterclockwise around the
// dart's vertex. Faces are the orbits of phi = sigma∘alpha. Immutable after
// construction; all operations are const and safe to call concurrently.
class PlaneGraph {
public:
    // Validates: permutations well formed, alpha a fixed-point-free
    // involution, every component embeds in the sphere (Euler characteristic
    // 2 per component). Throws ParseError otherwise, or when the graph is
    // disconnected and `require_connected` holds.
    static PlaneGraph make(std::vector<int> sigma, std::vector<int> alpha,
                           bool require_connected = true);

    int dart_count() const { return static_cast<int>(sigma_.size()); }
    int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    bool connected() const { return connected_; }

    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int alpha(int d) const { return alpha_[d]; }
    int phi(int d) const { return sigma_[alpha_[d]]; }

    int vertex_of(int d) const { return vertex_of_[d]; }
    int edge_of(int d) const { return d < alpha_[d] ? edge_id_[d] : edge_id_[alpha_[d]]; }
    // The two darts of edge e; darts_of_edge(e).first < .second.
    std::pair<int, int> darts_of_edge(int e) const { return edge_darts_[e]; }

    int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
    const std::vector<int>& vertex_darts(int v) const { return vertex_darts_[v]; }

    const std::vector<FaceWalk>& faces() const { return faces_; }
    // Face on each side of a dart. The orbit of phi containing d is the face
    // to the right of d; the left face is the orbit of alpha(d).
    int face_right(int d) const { return face_of_[d]; }
    int face_left(int d) const { return face_of_[alpha_[d]]; }
    // Unordered pair of faces adjacent to edge e (equal for a bridge).
    std::pair<int, int> faces_of_edge(int e) const;

    const std::vector<int>& raw_sigma() const { return sigma_; }
    const std::vector<int>& raw_alpha() const { return alpha_; }

private:
    PlaneGraph() = default;
    void build_derived();

    std::vector<int> sigma_, sigma_inv_, alpha_;
    std::vector<int> vertex_of_, edge_id_;
    std::vector<std::pair<int, int>> edge_darts_;
    std::vector<std::vector<int>> vertex_darts_;
    std::vector<FaceWalk> faces_;
    std::vector<int> face_of_;  // phi-orbit id per dart
    bool connected_ = true;
};

// Dart bijection taking the graph to itself: commutes with alpha and
// conjugates sigma to sigma (orientation-preserving) or to sigma^-1
// (orientation-reversing).
struct GraphIso {
    std::vector<int> dart_map;
    bool reversing = false;
};

enum class CodeMode { PreserveOrientation, EitherOrientation };

// Complete invariant of the connected rotation system: BFS canonical dart
// labeling started from every root dart (and from the mirror system sigma^-1
// in either-orientation mode), lexicographic minimum over the resulting
// codes. Equal codes <=> equivalent graphs (allowing reflection in either
// mode). Throws ParseError on disconnected input.
std::string canonical_code(const PlaneGraph& g, CodeMode mode);

// Same, but minimizing only over roots at one marked vertex: canonical form
// of the pair (graph, vertex). Codes agree iff there is an equivalence
// carrying one marked vertex to the other.
std::string canonical_code_marked(const PlaneGraph& g, int marked_vertex, CodeMode mode);

// Relabel into the canonical dart labeling (the argmin of the
// preserve-orientation code); equivalent graphs map to identical results.
PlaneGraph canonicalized(const PlaneGraph& g);

std::string hex_encode(std::string_view bytes);

// Full symmetry group (orientation-preserving and -reversing), found by
// matching rooted canonical codes; contains the identity and is closed under
// composition. The preserving elements come first.
std::vector<GraphIso> automorphism_group(const PlaneGraph& g);
int automorphism_count(const PlaneGraph& g, bool orientation_preserving_only);

// Dual on the same darts: sigma* = sigma∘alpha, alpha* = alpha. Faces and
// vertices exchange; dual(dual(g)) == g dart for dart.
PlaneGraph dual_graph(const PlaneGraph& g);

// Conjugate both permutations by a dart permutation: perm[d] is the new name
// of dart d.
PlaneGraph relabeled(const PlaneGraph& g, const std::vector<int>& perm);

// Compose two isos / apply to a graph (for group-closure checks).
GraphIso compose(const GraphIso& a, const GraphIso& b, const PlaneGraph& g);

// Line-oriented rotation-system text:
//   V <vertex-id>: d1 d2 d3 ...   darts at the vertex, counterclockwise
//   E: (d,d') (d,d') ...          dart pairings, one edge each
// '#' starts a comment. Dart ids must be exactly 0..2E-1.
PlaneGraph parse_graph(std::string_view text, bool require_connected = true);
std::string to_rot_text(const PlaneGraph& g);

// DOT export, edges only, face walks as comments.
std::string to_dot(const PlaneGraph& g);
// JSON object {darts, alpha, sigma, canonical_code}.
std::string to_json(const PlaneGraph& g);

// Convenience builder for simple graphs: per-vertex neighbor lists in
// counterclockwise order. Multigraphs need explicit dart files instead.
PlaneGraph from_ccw_neighbors(const std::vector<std::vector<int>>& nbrs);

// One new degree-2 vertex in the middle of every edge.
PlaneGraph subdivide_all_edges(const PlaneGraph& g);
// Inverse: splice out every degree-2 vertex. Throws ParseError if a whole
// component is a cycle of degree-2 vertices.
PlaneGraph suppress_degree_two(const PlaneGraph& g);

}  // namespace tischler
