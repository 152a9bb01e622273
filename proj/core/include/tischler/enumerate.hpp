#pragma once

#include <string>
#include <vector>

#include "tischler/tischler_graph.hpp"
#include "tischler/trees.hpp"

namespace tischler {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    PlaneGraph representative;  // canonical dart labeling
    std::string code;           // preserve-orientation canonical code
    std::string either_code;    // allows reflection; equal for mirror pairs
    BranchingData branching;
    bool obstructed = false;
    bool antipolynomial = false;
    int aut_preserving = 1;
    int aut_full = 1;
};

// All topological Tischler graphs with d+1 faces, one representative per
// orientation-preserving equivalence class. Mirror images count as distinct
// entries; mirror_pairing is the involution matching each entry to its
// reflection (fixed point when the class is amphichiral).
struct Catalog {
    int degree = 0;
    std::vector<CatalogEntry> entries;  // sorted by (branching, code)
    std::vector<int> mirror_pairing;
};

struct EnumerateOptions {
    // Nodes expanded across all degree sequences before giving up with
    // ResourceLimitError. Desk-scale d <= 5 stays well under the default.
    long long max_partial_candidates = 10'000'000;
};

Catalog enumerate_graphs(int degree, const EnumerateOptions& options = {});

std::string to_json(const Catalog& c);

// All topological Tischler trees whose internal vertex multiplicities form
// the given multiset, one per orientation-preserving equivalence class,
// sorted by tree code.
std::vector<TischlerTree> enumerate_trees(std::vector<int> branching);

// Involution pairing each tree with its mirror image.
std::vector<int> tree_mirror_pairing(const std::vector<TischlerTree>& trees);

// All trees for anti-polynomials of the given degree: the union of
// enumerate_trees over the partitions of degree-1.
std::vector<TischlerTree> enumerate_trees_of_degree(int degree);

}  // namespace tischler
