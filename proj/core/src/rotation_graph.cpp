#include "tischler/rotation_graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace tischler {

namespace {

bool is_permutation_vec(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// Connected components of the dart set under {sigma, alpha}.
std::vector<int> dart_components(const std::vector<int>& sigma, const std::vector<int>& alpha) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> comp(n, -1);
    int nc = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int e : {sigma[d], alpha[d]}) {
                if (comp[e] < 0) {
                    comp[e] = nc;
                    stack.push_back(e);
                }
            }
        }
        ++nc;
    }
    return comp;
}

int orbit_count(const std::vector<int>& perm, const std::vector<int>& comp, int which) {
    std::vector<char> seen(perm.size(), 0);
    int count = 0;
    for (int s = 0; s < static_cast<int>(perm.size()); ++s) {
        if (seen[s] || (which >= 0 && comp[s] != which)) continue;
        ++count;
        for (int d = s; !seen[d]; d = perm[d]) seen[d] = 1;
    }
    return count;
}

}  // namespace

PlaneGraph PlaneGraph::make(std::vector<int> sigma, std::vector<int> alpha,
                            bool require_connected) {
    if (sigma.size() != alpha.size())
        throw ParseError("sigma and alpha act on different dart sets");
    if (sigma.empty()) throw ParseError("empty graph");
    if (sigma.size() % 2 != 0) throw ParseError("odd number of darts");
    if (!is_permutation_vec(sigma)) throw ParseError("malformed permutation: sigma");
    if (!is_permutation_vec(alpha)) throw ParseError("malformed permutation: alpha");
    const int n = static_cast<int>(sigma.size());
    for (int d = 0; d < n; ++d) {
        if (alpha[d] == d) throw ParseError("alpha has a fixed point at dart " + std::to_string(d));
        if (alpha[alpha[d]] != d) throw ParseError("alpha is not an involution");
    }

    // Sphere check per component: V - E + F = 2 with F the phi-orbit count.
    std::vector<int> comp = dart_components(sigma, alpha);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> phi(n);
    for (int d = 0; d < n; ++d) phi[d] = sigma[alpha[d]];
    for (int c = 0; c < ncomp; ++c) {
        int nd = static_cast<int>(std::count(comp.begin(), comp.end(), c));
        int V = orbit_count(sigma, comp, c);
        int E = nd / 2;
        int F = orbit_count(phi, comp, c);
        if (V - E + F != 2)
            throw ParseError("not a sphere embedding: component has Euler characteristic " +
                             std::to_string(V - E + F));
    }
    if (require_connected && ncomp > 1) throw ParseError("graph is disconnected");

    PlaneGraph g;
    g.sigma_ = std::move(sigma);
    g.alpha_ = std::move(alpha);
    g.connected_ = (ncomp == 1);
    g.build_derived();
    return g;
}

void PlaneGraph::build_derived() {
    const int n = dart_count();
    sigma_inv_.assign(n, 0);
    for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

    // Vertices: sigma-orbits in order of least dart.
    vertex_of_.assign(n, -1);
    vertex_darts_.clear();
    for (int s = 0; s < n; ++s) {
        if (vertex_of_[s] >= 0) continue;
        int v = static_cast<int>(vertex_darts_.size());
        vertex_darts_.emplace_back();
        for (int d = s; vertex_of_[d] < 0; d = sigma_[d]) {
            vertex_of_[d] = v;
            vertex_darts_[v].push_back(d);
        }
    }

    // Edges: alpha-orbits in order of least dart.
    edge_id_.assign(n, -1);
    edge_darts_.clear();
    for (int d = 0; d < n; ++d) {
        if (d < alpha_[d]) {
            edge_id_[d] = static_cast<int>(edge_darts_.size());
            edge_darts_.emplace_back(d, alpha_[d]);
        }
    }

    // Faces: phi-orbits. The orbit of d walks the boundary of the face to
    // the right of d; flipping each dart and reversing yields the walk with
    // the face on the left, which is what FaceWalk stores.
    face_of_.assign(n, -1);
    faces_.clear();
    for (int s = 0; s < n; ++s) {
        if (face_of_[s] >= 0) continue;
        int f = static_cast<int>(faces_.size());
        std::vector<int> orbit;
        for (int d = s; face_of_[d] < 0; d = phi(d)) {
            face_of_[d] = f;
            orbit.push_back(d);
        }
        FaceWalk w;
        w.darts.reserve(orbit.size());
        for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) w.darts.push_back(alpha_[*it]);
        for (int d : w.darts) {
            w.vertices.push_back(vertex_of_[d]);
            w.edges.push_back(edge_of(d));
        }
        faces_.push_back(std::move(w));
    }
}

std::pair<int, int> PlaneGraph::faces_of_edge(int e) const {
    auto [d, dbar] = edge_darts_[e];
    return {face_of_[d], face_of_[dbar]};
}

namespace {

// Rooted BFS code: relabel darts in first-visit order of the deterministic
// traversal (sigma^{±1} image first, then alpha image), emitting the pair of
// neighbor labels per dart. Complete invariant of the rooted (possibly
// mirrored) map.
void rooted_code(const PlaneGraph& g, int root, bool mirrored, std::vector<int>& out,
                 std::vector<int>* labels_out = nullptr) {
    const int n = g.dart_count();
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    out.clear();
    out.reserve(2 * n);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        int d = order[i];
        int s = mirrored ? g.sigma_inv(d) : g.sigma(d);
        int a = g.alpha(d);
        for (int nb : {s, a}) {
            if (label[nb] < 0) {
                label[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
        }
        out.push_back(label[s]);
        out.push_back(label[a]);
    }
    if (static_cast<int>(order.size()) != n)
        throw ParseError("canonical code requires a connected graph");
    if (labels_out) *labels_out = std::move(label);
}

std::string pack_code(const std::vector<int>& code, bool mirrored_tag) {
    std::string s;
    s.reserve(code.size() * 2 + 1);
    // Orientation tag keeps preserve-mode codes of chiral mirror images
    // distinct from either-mode codes of the same graphs.
    s.push_back(mirrored_tag ? 'M' : 'P');
    for (int x : code) {
        s.push_back(static_cast<char>((x >> 8) & 0xff));
        s.push_back(static_cast<char>(x & 0xff));
    }
    return s;
}

}  // namespace

std::string canonical_code(const PlaneGraph& g, CodeMode mode) {
    if (!g.connected()) throw ParseError("canonical code requires a connected graph");
    std::vector<int> code, best;
    bool have = false;
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        if (mirrored && mode == CodeMode::PreserveOrientation) break;
        for (int root = 0; root < g.dart_count(); ++root) {
            rooted_code(g, root, mirrored != 0, code);
            if (!have || code < best) {
                best = code;
                have = true;
            }
        }
    }
    return pack_code(best, false);
}

std::string canonical_code_marked(const PlaneGraph& g, int marked_vertex, CodeMode mode) {
    if (!g.connected()) throw ParseError("canonical code requires a connected graph");
    if (marked_vertex < 0 || marked_vertex >= g.vertex_count())
        throw ParseError("marked vertex out of range");
    std::vector<int> code, best;
    bool have = false;
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        if (mirrored && mode == CodeMode::PreserveOrientation) break;
        for (int root : g.vertex_darts(marked_vertex)) {
            rooted_code(g, root, mirrored != 0, code);
            if (!have || code < best) {
                best = code;
                have = true;
            }
        }
    }
    return pack_code(best, false);
}

PlaneGraph canonicalized(const PlaneGraph& g) {
    if (!g.connected()) throw ParseError("canonical form requires a connected graph");
    std::vector<int> code, best, labels, best_labels;
    for (int root = 0; root < g.dart_count(); ++root) {
        rooted_code(g, root, false, code, &labels);
        if (root == 0 || code < best) {
            best = code;
            best_labels = labels;
        }
    }
    return relabeled(g, best_labels);
}

std::vector<GraphIso> automorphism_group(const PlaneGraph& g) {
    if (!g.connected()) throw ParseError("automorphism group requires a connected graph");
    const int n = g.dart_count();
    std::vector<int> ref_code, ref_labels;
    rooted_code(g, 0, false, ref_code, &ref_labels);

    std::vector<GraphIso> group;
    std::vector<int> code, labels;
    for (int rev = 0; rev < 2; ++rev) {
        for (int root = 0; root < n; ++root) {
            rooted_code(g, root, rev != 0, code, &labels);
            if (code != ref_code) continue;
            // Matching labels define the dart bijection ref-label -> label.
            std::vector<int> by_label(n), map(n);
            for (int d = 0; d < n; ++d) by_label[labels[d]] = d;
            for (int d = 0; d < n; ++d) map[d] = by_label[ref_labels[d]];
            group.push_back(GraphIso{std::move(map), rev != 0});
        }
    }
    return group;
}

int automorphism_count(const PlaneGraph& g, bool orientation_preserving_only) {
    auto group = automorphism_group(g);
    if (!orientation_preserving_only) return static_cast<int>(group.size());
    int c = 0;
    for (const auto& iso : group)
        if (!iso.reversing) ++c;
    return c;
}

GraphIso compose(const GraphIso& a, const GraphIso& b, const PlaneGraph&) {
    GraphIso r;
    r.dart_map.resize(a.dart_map.size());
    for (size_t d = 0; d < a.dart_map.size(); ++d) r.dart_map[d] = a.dart_map[b.dart_map[d]];
    r.reversing = a.reversing != b.reversing;
    return r;
}

PlaneGraph dual_graph(const PlaneGraph& g) {
    const int n = g.dart_count();
    std::vector<int> sigma(n), alpha(n);
    for (int d = 0; d < n; ++d) {
        sigma[d] = g.phi(d);
        alpha[d] = g.alpha(d);
    }
    return PlaneGraph::make(std::move(sigma), std::move(alpha), !g.connected() ? false : true);
}

PlaneGraph relabeled(const PlaneGraph& g, const std::vector<int>& perm) {
    const int n = g.dart_count();
    if (static_cast<int>(perm.size()) != n || !is_permutation_vec(perm))
        throw ParseError("relabeling is not a permutation of the darts");
    std::vector<int> sigma(n), alpha(n);
    for (int d = 0; d < n; ++d) {
        sigma[perm[d]] = perm[g.sigma(d)];
        alpha[perm[d]] = perm[g.alpha(d)];
    }
    return PlaneGraph::make(std::move(sigma), std::move(alpha), !g.connected() ? false : true);
}

namespace {

std::string_view strip(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

PlaneGraph parse_graph(std::string_view text, bool require_connected) {
    std::vector<std::vector<int>> vertex_lists;
    std::vector<std::pair<int, int>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string_view sv = strip(line);
        if (sv.empty()) continue;
        if (sv[0] == 'V') {
            auto colon = sv.find(':');
            if (colon == std::string_view::npos) throw ParseError("V line missing ':': " + line);
            std::istringstream darts{std::string(sv.substr(colon + 1))};
            std::vector<int> ds;
            int d;
            while (darts >> d) ds.push_back(d);
            if (ds.empty()) throw ParseError("vertex with no darts: " + line);
            vertex_lists.push_back(std::move(ds));
        } else if (sv[0] == 'E') {
            auto colon = sv.find(':');
            if (colon == std::string_view::npos) throw ParseError("E line missing ':': " + line);
            std::string rest(sv.substr(colon + 1));
            for (char& c : rest)
                if (c == '(' || c == ')' || c == ',') c = ' ';
            std::istringstream ps(rest);
            int a, b;
            while (ps >> a >> b) pairs.emplace_back(a, b);
        } else {
            throw ParseError("unrecognized line: " + line);
        }
    }
    size_t ndarts = 0;
    for (const auto& vl : vertex_lists) ndarts += vl.size();
    if (ndarts == 0) throw ParseError("no vertices");
    if (pairs.size() * 2 != ndarts)
        throw ParseError("edge pairings do not cover the darts exactly once");

    std::vector<int> sigma(ndarts, -1), alpha(ndarts, -1);
    for (const auto& vl : vertex_lists) {
        for (size_t i = 0; i < vl.size(); ++i) {
            int d = vl[i], next = vl[(i + 1) % vl.size()];
            if (d < 0 || d >= static_cast<int>(ndarts))
                throw ParseError("dart id out of range: " + std::to_string(d));
            if (sigma[d] != -1) throw ParseError("dart listed twice: " + std::to_string(d));
            sigma[d] = next;
        }
    }
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= static_cast<int>(ndarts) || b >= static_cast<int>(ndarts))
            throw ParseError("edge pair out of range");
        if (alpha[a] != -1 || alpha[b] != -1) throw ParseError("dart paired twice");
        if (a == b) throw ParseError("alpha has a fixed point at dart " + std::to_string(a));
        alpha[a] = b;
        alpha[b] = a;
    }
    for (size_t d = 0; d < ndarts; ++d)
        if (sigma[d] < 0 || alpha[d] < 0)
            throw ParseError("dart " + std::to_string(d) + " missing from V or E lines");
    return PlaneGraph::make(std::move(sigma), std::move(alpha), require_connected);
}

std::string to_rot_text(const PlaneGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "V " << v << ":";
        for (int d : g.vertex_darts(v)) out << ' ' << d;
        out << '\n';
    }
    out << "E:";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.darts_of_edge(e);
        out << " (" << a << "," << b << ")";
    }
    out << '\n';
    return out.str();
}

std::string to_dot(const PlaneGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.darts_of_edge(e);
        out << "  " << g.vertex_of(a) << " -- " << g.vertex_of(b) << "; // e" << e << "\n";
    }
    for (int f = 0; f < g.face_count(); ++f) {
        out << "  // face F" << f << ": vertices";
        for (int v : g.faces()[f].vertices) out << ' ' << v;
        out << "\n";
    }
    out << "}\n";
    return out.str();
}

std::string hex_encode(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(hex[c >> 4]);
        out.push_back(hex[c & 0xf]);
    }
    return out;
}

std::string to_json(const PlaneGraph& g) {
    std::ostringstream out;
    auto list = [&](const std::vector<int>& v) {
        out << '[';
        for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ']';
    };
    out << "{\"darts\":" << g.dart_count() << ",\"alpha\":";
    list(g.raw_alpha());
    out << ",\"sigma\":";
    list(g.raw_sigma());
    out << ",\"canonical_code\":\"" << hex_encode(canonical_code(g, CodeMode::PreserveOrientation))
        << "\"}";
    return out.str();
}

PlaneGraph from_ccw_neighbors(const std::vector<std::vector<int>>& nbrs) {
    const int nv = static_cast<int>(nbrs.size());
    // dart = (v, i-th listed neighbor); find partner as (u, position of v).
    std::vector<int> first_dart(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        first_dart[v + 1] = first_dart[v] + static_cast<int>(nbrs[v].size());
    int n = first_dart[nv];
    std::vector<int> sigma(n), alpha(n, -1);
    for (int v = 0; v < nv; ++v) {
        int deg = static_cast<int>(nbrs[v].size());
        for (int i = 0; i < deg; ++i) sigma[first_dart[v] + i] = first_dart[v] + (i + 1) % deg;
    }
    for (int v = 0; v < nv; ++v) {
        for (size_t i = 0; i < nbrs[v].size(); ++i) {
            int u = nbrs[v][i];
            if (u < 0 || u >= nv) throw ParseError("neighbor out of range");
            if (u == v) throw ParseError("from_ccw_neighbors does not support loops");
            auto it = std::find(nbrs[u].begin(), nbrs[u].end(), v);
            if (it == nbrs[u].end()) throw ParseError("asymmetric adjacency");
            int d = first_dart[v] + static_cast<int>(i);
            int e = first_dart[u] + static_cast<int>(it - nbrs[u].begin());
            alpha[d] = e;
        }
    }
    for (int d = 0; d < n; ++d)
        if (alpha[alpha[d]] != d) throw ParseError("adjacency lists are not consistent");
    return PlaneGraph::make(std::move(sigma), std::move(alpha));
}

PlaneGraph subdivide_all_edges(const PlaneGraph& g) {
    const int n = g.dart_count();
    const int ne = g.edge_count();
    std::vector<int> sigma(n + 2 * ne), alpha(n + 2 * ne);
    for (int d = 0; d < n; ++d) sigma[d] = g.sigma(d);
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = g.darts_of_edge(e);
        int na = n + 2 * e, nb = n + 2 * e + 1;
        alpha[a] = na;
        alpha[na] = a;
        alpha[b] = nb;
        alpha[nb] = b;
        sigma[na] = nb;
        sigma[nb] = na;
    }
    return PlaneGraph::make(std::move(sigma), std::move(alpha), !g.connected() ? false : true);
}

PlaneGraph suppress_degree_two(const PlaneGraph& g) {
    const int n = g.dart_count();
    std::vector<char> drop(n, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2)
            for (int d : g.vertex_darts(v)) drop[d] = 1;
    }
    // alpha': from a kept dart, hop through chains of degree-2 vertices.
    std::vector<int> keep;
    for (int d = 0; d < n; ++d)
        if (!drop[d]) keep.push_back(d);
    if (keep.empty()) throw ParseError("suppress_degree_two: graph is a cycle of degree-2 vertices");
    std::vector<int> newid(n, -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    std::vector<int> sigma(keep.size()), alpha(keep.size());
    for (int d : keep) {
        sigma[newid[d]] = newid[g.sigma(d)];
        int a = g.alpha(d);
        int guard = 0;
        while (drop[a]) {
            a = g.alpha(g.sigma(a));  // the other dart of the degree-2 vertex
            if (++guard > n) throw ParseError("suppress_degree_two: degree-2 cycle");
        }
        alpha[newid[d]] = newid[a];
    }
    return PlaneGraph::make(std::move(sigma), std::move(alpha), !g.connected() ? false : true);
}

}  // namespace tischler
