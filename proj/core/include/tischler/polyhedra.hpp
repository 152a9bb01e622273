#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tischler/tischler_graph.hpp"

namespace tischler {

// Named rotation systems compiled into the library (also shipped under
// data/). Lookup order for `load_named_graph`: an exact file path, then
// <TISCHLER_DATA>/<name>.rot and <TISCHLER_DATA>/polyhedra/<name>.rot when
// the environment variable is set, then the embedded copy.
std::vector<std::string> builtin_graph_names();
std::optional<std::string> builtin_graph_text(const std::string& name);
PlaneGraph load_named_graph(const std::string& name_or_path);

uint64_t fnv1a64(std::string_view bytes);

struct IcosahedralEntry {
    std::string name;
    bool valid = false;
    bool unobstructed = false;
    int vertex_count = 0;
    int degree = 0;
    int aut_preserving = 0;
    int aut_full = 0;
    BranchingData branching;
};

struct IcosahedralReport {
    std::vector<IcosahedralEntry> entries;
    bool all_pass = false;
    // Candidate verification only: that these three are the only polyhedra
    // with 32 faces and icosahedral symmetry is cited from the polyhedra
    // classification, not re-proved here.
    std::string completeness_note;
};

// Validates the three built-in degree-31 graphs (truncated icosahedron,
// truncated dodecahedron, icosidodecahedron): 32 Jordan faces, unobstructed,
// orientation-preserving symmetry group of order 60, branching data
// (1 x 60), (1 x 60), (2 x 30). Throws ParseError if the embedded data does
// not match its pinned checksum.
IcosahedralReport verify_icosahedral();

}  // namespace tischler
