#include "tischler/tischler_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tischler {

namespace {

BranchingData branching_of(const PlaneGraph& g) {
    BranchingData b;
    for (int v = 0; v < g.vertex_count(); ++v) b.multiplicities.push_back(g.degree(v) - 2);
    std::sort(b.multiplicities.rbegin(), b.multiplicities.rend());
    return b;
}

}  // namespace

int BranchingData::sum() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

std::string BranchingData::str() const {
    std::string s = "(";
    for (size_t i = 0; i < multiplicities.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(multiplicities[i]);
    }
    return s + ")";
}

ValidationResult validate(const PlaneGraph& g) {
    ValidationResult r;
    if (!g.connected()) {
        r.violations.push_back({Violation::Disconnected, -1, -1, -1, -1, "graph is disconnected"});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3) {
            r.violations.push_back({Violation::LowDegree, v, -1, -1, -1,
                                    "vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v))});
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.darts_of_edge(e);
        if (g.vertex_of(a) == g.vertex_of(b)) {
            r.violations.push_back({Violation::Loop, g.vertex_of(a), -1, -1, -1,
                                    "loop at vertex " + std::to_string(g.vertex_of(a))});
        }
    }
    for (int f = 0; f < g.face_count(); ++f) {
        const FaceWalk& w = g.faces()[f];
        std::set<int> vs, es;
        int rep_v = -1, rep_e = -1;
        for (size_t i = 0; i < w.darts.size(); ++i) {
            if (!vs.insert(w.vertices[i]).second && rep_v < 0) rep_v = w.vertices[i];
            if (!es.insert(w.edges[i]).second && rep_e < 0) rep_e = w.edges[i];
        }
        if (rep_v >= 0 || rep_e >= 0) {
            std::string msg = "face " + std::to_string(f) + " is not a Jordan domain:";
            if (rep_v >= 0) msg += " repeated vertex " + std::to_string(rep_v);
            if (rep_e >= 0) msg += " repeated edge " + std::to_string(rep_e);
            r.violations.push_back({Violation::FaceNotJordan, -1, f, rep_v, rep_e, msg});
        }
    }
    if (!r.violations.empty()) return r;
    r.value.emplace(g, g.face_count() - 1, branching_of(g));
    return r;
}

BranchingData branching_data(const TischlerGraph& t) {
    BranchingData b = branching_of(t.graph);
    // Two independent routes to 2d-2: the Euler count and the degree sum.
    if (b.sum() != 2 * t.degree - 2)
        throw std::logic_error("branching sum disagrees with 2d-2");
    return b;
}

std::optional<ObstructionWitness> is_obstructed(const TischlerGraph& t) {
    const PlaneGraph& g = t.graph;
    // Edges shared by each unordered face pair; faces of an edge are distinct
    // in a valid TischlerGraph (a bridge would repeat the edge in its face).
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [f1, f2] = g.faces_of_edge(e);
        if (f1 > f2) std::swap(f1, f2);
        shared[{f1, f2}].push_back(e);
    }
    std::optional<ObstructionWitness> best;
    for (const auto& [fp, edges] : shared) {
        if (edges.size() < 2) continue;
        ObstructionWitness w{fp.first, fp.second, edges[0], edges[1]};
        if (!best || std::tie(w.face_a, w.face_b, w.edge_a, w.edge_b) <
                         std::tie(best->face_a, best->face_b, best->edge_a, best->edge_b))
            best = w;
    }
    return best;
}

PlaneGraph expand_full(const TischlerGraph& t) {
    PlaneGraph full = subdivide_all_edges(t.graph);
    if (full.face_count() != t.degree + 1)
        throw std::logic_error("subdivision changed the face count");
    return full;
}

bool is_bipartite(const PlaneGraph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.vertex_darts(v)) {
                int u = g.vertex_of(g.alpha(d));
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string to_json(const TischlerGraph& t) {
    std::ostringstream out;
    out << "{\"canonical_code\":\"" << hex_encode(canonical_code(t.graph, CodeMode::PreserveOrientation))
        << "\",\"degree\":" << t.degree << ",\"branching\":[";
    for (size_t i = 0; i < t.branching.multiplicities.size(); ++i)
        out << (i ? "," : "") << t.branching.multiplicities[i];
    out << "]";
    auto w = is_obstructed(t);
    out << ",\"obstructed\":" << (w ? "true" : "false");
    if (w) {
        out << ",\"witness\":{\"face_a\":" << w->face_a << ",\"face_b\":" << w->face_b
            << ",\"edge_a\":" << w->edge_a << ",\"edge_b\":" << w->edge_b << "}";
    }
    out << "}";
    return out.str();
}

}  // namespace tischler
