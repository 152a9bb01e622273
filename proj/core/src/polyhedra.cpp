#include "tischler/polyhedra.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tischler {

namespace {
#include "polyhedra_data.inc"

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<std::string> builtin_graph_names() {
    std::vector<std::string> names;
    for (const Named& n : k_named) names.push_back(n.name);
    return names;
}

std::optional<std::string> builtin_graph_text(const std::string& name) {
    for (const Named& n : k_named) {
        if (name == n.name) {
            if (fnv1a64(n.text) != n.checksum)
                throw ParseError("built-in data corrupted (checksum): " + name);
            return std::string(n.text);
        }
    }
    return std::nullopt;
}

PlaneGraph load_named_graph(const std::string& name_or_path) {
    if (auto text = read_file(name_or_path)) return parse_graph(*text);
    if (const char* dir = std::getenv("TISCHLER_DATA")) {
        for (std::string sub : {"/", "/polyhedra/"}) {
            if (auto text = read_file(std::string(dir) + sub + name_or_path + ".rot"))
                return parse_graph(*text);
        }
    }
    if (auto text = builtin_graph_text(name_or_path)) return parse_graph(*text);
    throw ParseError("no such graph file or built-in name: " + name_or_path);
}

IcosahedralReport verify_icosahedral() {
    IcosahedralReport report;
    struct Want {
        const char* name;
        int vertices;
        BranchingData branching;
    };
    const Want wants[] = {
        {"truncated_icosahedron", 60, {std::vector<int>(60, 1)}},
        {"truncated_dodecahedron", 60, {std::vector<int>(60, 1)}},
        {"icosidodecahedron", 30, {std::vector<int>(30, 2)}},
    };
    report.all_pass = true;
    for (const Want& want : wants) {
        IcosahedralEntry e;
        e.name = want.name;
        auto text = builtin_graph_text(want.name);
        if (!text) throw ParseError("built-in polyhedron missing: " + e.name);
        PlaneGraph g = parse_graph(*text);
        ValidationResult r = validate(g);
        e.valid = r.ok();
        if (r.ok()) {
            e.unobstructed = !is_obstructed(*r.value).has_value();
            e.degree = r.value->degree;
            e.branching = r.value->branching;
        }
        e.vertex_count = g.vertex_count();
        e.aut_preserving = automorphism_count(g, true);
        e.aut_full = automorphism_count(g, false);
        bool pass = e.valid && e.unobstructed && e.degree == 31 &&
                    e.vertex_count == want.vertices && e.branching == want.branching &&
                    e.aut_preserving == 60;
        report.all_pass = report.all_pass && pass;
        report.entries.push_back(std::move(e));
    }
    report.completeness_note =
        "candidate verification only: that no further polyhedron has 32 faces and "
        "icosahedral symmetry is taken from the classification of such polyhedra";
    return report;
}

}  // namespace tischler
