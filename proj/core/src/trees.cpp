#include "tischler/trees.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tischler {

int TischlerTree::unbounded_count() const {
    int c = 0;
    for (const auto& rot : rotation) c += static_cast<int>(std::count(rot.begin(), rot.end(), kUnboundedSlot));
    return c;
}

int TischlerTree::unbounded_count_at(int v) const {
    return static_cast<int>(std::count(rotation[v].begin(), rotation[v].end(), kUnboundedSlot));
}

int TischlerTree::degree() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 1);
}

std::optional<std::string> tree_defect(const TischlerTree& t) {
    const int r = t.vertex_count();
    if (r == 0) return "tree has no vertices";
    if (static_cast<int>(t.multiplicities.size()) != r)
        return "multiplicity list does not match vertex count";
    if (static_cast<int>(t.bounded_edges.size()) != r - 1)
        return "bounded part has " + std::to_string(t.bounded_edges.size()) +
               " edges; a tree on " + std::to_string(r) + " vertices needs " + std::to_string(r - 1);
    // Acyclic + connected via union-find on the bounded edges.
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : t.bounded_edges) {
        if (a < 0 || b < 0 || a >= r || b >= r) return "bounded edge endpoint out of range";
        int ra = find(a), rb = find(b);
        if (ra == rb) return "bounded part contains a cycle";
        parent[ra] = rb;
    }
    // Rotations: every bounded edge once per endpoint, degrees m+2 >= 3.
    std::vector<int> uses(t.bounded_edges.size(), 0);
    for (int v = 0; v < r; ++v) {
        int deg = static_cast<int>(t.rotation[v].size());
        if (deg != t.multiplicities[v] + 2)
            return "vertex " + std::to_string(v) + " has " + std::to_string(deg) +
                   " slots; multiplicity " + std::to_string(t.multiplicities[v]) + " needs " +
                   std::to_string(t.multiplicities[v] + 2);
        if (deg < 3) return "vertex " + std::to_string(v) + " has degree < 3";
        for (int slot : t.rotation[v]) {
            if (slot == TischlerTree::kUnboundedSlot) continue;
            if (slot < 0 || slot >= static_cast<int>(t.bounded_edges.size()))
                return "rotation references unknown bounded edge";
            auto [a, b] = t.bounded_edges[slot];
            if (a != v && b != v) return "rotation lists an edge not incident to its vertex";
            ++uses[slot];
        }
    }
    for (size_t k = 0; k < uses.size(); ++k)
        if (uses[k] != 2) return "bounded edge " + std::to_string(k) + " appears " +
                                 std::to_string(uses[k]) + " times in rotations";
    if (t.unbounded_count() < 3) return "fewer than 3 unbounded edges";
    return std::nullopt;
}

TischlerGraph from_tree(const TischlerTree& t) {
    if (auto defect = tree_defect(t)) throw ParseError("invalid Tischler tree: " + *defect);
    const int r = t.vertex_count();
    const int nb = static_cast<int>(t.bounded_edges.size());
    const int nu = t.unbounded_count();

    // Darts: one per slot, numbered per vertex in rotation order; then nu
    // darts at the new infinity vertex.
    std::vector<int> first(r + 1, 0);
    for (int v = 0; v < r; ++v) first[v + 1] = first[v] + static_cast<int>(t.rotation[v].size());
    const int n = first[r] + nu;
    std::vector<int> sigma(n, -1), alpha(n, -1);
    for (int v = 0; v < r; ++v) {
        int deg = static_cast<int>(t.rotation[v].size());
        for (int i = 0; i < deg; ++i) sigma[first[v] + i] = first[v] + (i + 1) % deg;
    }
    std::vector<int> edge_dart(nb, -1);
    std::vector<int> unbounded_darts;  // slot darts, in vertex order
    for (int v = 0; v < r; ++v) {
        for (size_t i = 0; i < t.rotation[v].size(); ++i) {
            int d = first[v] + static_cast<int>(i);
            int slot = t.rotation[v][i];
            if (slot == TischlerTree::kUnboundedSlot) {
                unbounded_darts.push_back(d);
            } else if (edge_dart[slot] < 0) {
                edge_dart[slot] = d;
            } else {
                alpha[d] = edge_dart[slot];
                alpha[edge_dart[slot]] = d;
            }
        }
    }

    // Cyclic order at infinity: walk the single face of the tree with each
    // unbounded slot closed off by a private leaf; the reversed slot order
    // along that walk is the counterclockwise order at the infinity vertex.
    {
        std::vector<int> lsigma(first[r] + nu), lalpha(first[r] + nu, -1);
        for (int d = 0; d < first[r]; ++d) lsigma[d] = sigma[d];
        for (int k = 0; k < nu; ++k) {
            int leaf_dart = first[r] + k;
            lsigma[leaf_dart] = leaf_dart;
            lalpha[unbounded_darts[k]] = leaf_dart;
            lalpha[leaf_dart] = unbounded_darts[k];
        }
        for (int d = 0; d < first[r]; ++d)
            if (lalpha[d] < 0) lalpha[d] = alpha[d];
        std::vector<int> slot_order;  // slot darts in phi-orbit order
        int start = unbounded_darts[0];
        int d = start;
        do {
            if (lalpha[d] >= first[r]) slot_order.push_back(d);
            d = lsigma[lalpha[d]];
        } while (d != start);
        if (static_cast<int>(slot_order.size()) != nu)
            throw std::logic_error("tree walk missed unbounded slots");
        std::reverse(slot_order.begin(), slot_order.end());
        for (int k = 0; k < nu; ++k) {
            int inf_dart = first[r] + k;
            int next_inf = first[r] + (k + 1) % nu;
            sigma[inf_dart] = next_inf;
            alpha[inf_dart] = slot_order[k];
            alpha[slot_order[k]] = inf_dart;
        }
    }

    PlaneGraph g = PlaneGraph::make(std::move(sigma), std::move(alpha));
    ValidationResult vr = validate(g);
    if (!vr.ok())
        throw std::logic_error("compactified tree failed validation: " + vr.violations[0].message);
    if (vr.value->degree != t.degree())
        throw std::logic_error("compactified tree has the wrong degree");
    return std::move(*vr.value);
}

bool is_antipolynomial(const TischlerGraph& t) {
    for (int v = 0; v < t.graph.vertex_count(); ++v)
        if (t.graph.degree(v) == t.graph.face_count()) return true;
    return false;
}

std::optional<TischlerTree> to_tree(const TischlerGraph& t, int v) {
    const PlaneGraph& g = t.graph;
    if (v < 0 || v >= g.vertex_count()) throw ParseError("vertex out of range");
    if (g.degree(v) != g.face_count()) return std::nullopt;

    TischlerTree tree;
    std::vector<int> vmap(g.vertex_count(), -1);
    int nv = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) vmap[u] = nv++;
    tree.multiplicities.resize(nv);
    tree.rotation.resize(nv);
    std::vector<int> edge_map(g.edge_count(), -1);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == v) continue;
        tree.multiplicities[vmap[u]] = g.degree(u) - 2;
        for (int d : g.vertex_darts(u)) {
            int other = g.vertex_of(g.alpha(d));
            if (other == v) {
                tree.rotation[vmap[u]].push_back(TischlerTree::kUnboundedSlot);
            } else {
                int e = g.edge_of(d);
                if (edge_map[e] < 0) {
                    edge_map[e] = static_cast<int>(tree.bounded_edges.size());
                    tree.bounded_edges.emplace_back(vmap[u], vmap[other]);
                }
                tree.rotation[vmap[u]].push_back(edge_map[e]);
            }
        }
    }
    if (auto defect = tree_defect(tree))
        throw std::logic_error("deleting the infinity vertex did not leave a tree: " + *defect);
    return tree;
}

std::string tree_code(const TischlerTree& t, CodeMode mode) {
    TischlerGraph g = from_tree(t);
    // from_tree appends the infinity vertex last.
    return canonical_code_marked(g.graph, g.graph.vertex_count() - 1, mode);
}

TischlerTree parse_tree(std::string_view text) {
    TischlerTree t;
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok != "T") throw ParseError("tree line must start with 'T': " + line);
        int v;
        char colon;
        if (!(ls >> v >> colon) || colon != ':') throw ParseError("bad tree line: " + line);
        if (v != static_cast<int>(rows.size())) throw ParseError("tree vertices must be 0,1,2,...");
        std::vector<std::string> slots;
        while (ls >> tok) slots.push_back(tok);
        rows.push_back(std::move(slots));
    }
    int max_edge = -1;
    for (const auto& row : rows) {
        std::vector<int> rot;
        for (const auto& s : row) {
            if (s == "*") {
                rot.push_back(TischlerTree::kUnboundedSlot);
            } else if (s.size() > 1 && s[0] == 'e') {
                int k = std::stoi(s.substr(1));
                rot.push_back(k);
                max_edge = std::max(max_edge, k);
            } else {
                throw ParseError("bad slot token: " + s);
            }
        }
        t.rotation.push_back(std::move(rot));
        t.multiplicities.push_back(static_cast<int>(t.rotation.back().size()) - 2);
    }
    t.bounded_edges.assign(max_edge + 1, {-1, -1});
    for (int v = 0; v < t.vertex_count(); ++v) {
        for (int slot : t.rotation[v]) {
            if (slot == TischlerTree::kUnboundedSlot) continue;
            if (slot > max_edge) throw ParseError("edge index out of range");
            auto& e = t.bounded_edges[slot];
            if (e.first < 0)
                e.first = v;
            else if (e.second < 0)
                e.second = v;
            else
                throw ParseError("edge e" + std::to_string(slot) + " used more than twice");
        }
    }
    if (auto defect = tree_defect(t)) throw ParseError("invalid Tischler tree: " + *defect);
    return t;
}

std::string to_tree_text(const TischlerTree& t) {
    std::ostringstream out;
    for (int v = 0; v < t.vertex_count(); ++v) {
        out << "T " << v << ":";
        for (int slot : t.rotation[v]) {
            if (slot == TischlerTree::kUnboundedSlot)
                out << " *";
            else
                out << " e" << slot;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tischler
