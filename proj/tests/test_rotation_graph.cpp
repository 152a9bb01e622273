#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tischler/rotation_graph.hpp"
#include "tischler/tischler_graph.hpp"

using namespace tischler;

namespace {

// Center vertex 0, outer triangle 1,2,3; drawn with true counterclockwise
// rotations.
PlaneGraph k4() {
    return from_ccw_neighbors({{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}});
}

PlaneGraph theta() {
    return parse_graph(R"(# theta: two vertices, three parallel edges
V 0: 0 1 2
V 1: 3 4 5
E: (0,3) (1,5) (2,4)
)");
}

PlaneGraph cube() {
    // Outer square 0..3, inner square 4..7, spokes i -- i+4.
    std::vector<std::vector<int>> nbrs;
    for (int i = 0; i < 4; ++i) nbrs.push_back({(i + 1) % 4, i + 4, (i + 3) % 4});
    for (int i = 0; i < 4; ++i) nbrs.push_back({i, 4 + (i + 1) % 4, 4 + (i + 3) % 4});
    return from_ccw_neighbors(nbrs);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("K4 counts and Euler formula") {
    PlaneGraph g = k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    for (const FaceWalk& w : g.faces()) CHECK(w.darts.size() == 3);
}

TEST_CASE("theta graph faces are bigons") {
    PlaneGraph g = theta();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 3);
    for (const FaceWalk& w : g.faces()) CHECK(w.darts.size() == 2);
}

TEST_CASE("single edge graph has one face") {
    PlaneGraph g = parse_graph("V 0: 0\nV 1: 1\nE: (0,1)\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.face_count() == 1);
}

TEST_CASE("torus-like rotation system is rejected") {
    CHECK_THROWS_WITH_AS(parse_graph("V 0: 0 1 2\nV 1: 3 4 5\nE: (0,3) (1,4) (2,5)\n"),
                         doctest::Contains("not a sphere embedding"), ParseError);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("V 0: 0 0\nE: (0,0)\n"), ParseError);       // dart twice
    CHECK_THROWS_AS(parse_graph("V 0: 0 1\nE: (0,0) (1,1)\n"), ParseError); // alpha fixed point
    CHECK_THROWS_AS(parse_graph("V 0: 0 1\nV 1: 2 3\nE: (0,1) (2,3)\n"), ParseError); // disconnected
    CHECK_NOTHROW(parse_graph("V 0: 0 1\nV 1: 2 3\nE: (0,1) (2,3)\n", false));
}

TEST_CASE("face walk darts run with the face on the left") {
    PlaneGraph g = k4();
    for (int f = 0; f < g.face_count(); ++f) {
        const FaceWalk& w = g.faces()[f];
        for (size_t i = 0; i < w.darts.size(); ++i) {
            int d = w.darts[i];
            CHECK(g.face_left(d) == f);
            // consecutive darts share the head/tail vertex
            int head = g.vertex_of(g.alpha(d));
            CHECK(head == w.vertices[(i + 1) % w.vertices.size()]);
        }
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(20260809);
    for (PlaneGraph g : {k4(), theta(), cube()}) {
        std::string code = canonical_code(g, CodeMode::PreserveOrientation);
        std::string code_either = canonical_code(g, CodeMode::EitherOrientation);
        for (int trial = 0; trial < 100; ++trial) {
            PlaneGraph h = relabeled(g, random_perm(g.dart_count(), rng));
            CHECK(canonical_code(h, CodeMode::PreserveOrientation) == code);
            CHECK(canonical_code(h, CodeMode::EitherOrientation) == code_either);
        }
    }
}

TEST_CASE("canonical code distinguishes graphs") {
    CHECK(canonical_code(k4(), CodeMode::PreserveOrientation) !=
          canonical_code(theta(), CodeMode::PreserveOrientation));
}

TEST_CASE("K4 automorphism group has order 24, preserving subgroup 12") {
    PlaneGraph g = k4();
    auto group = automorphism_group(g);
    CHECK(group.size() == 24);
    CHECK(automorphism_count(g, true) == 12);

    // Closed under composition; order divides 2 * dart count.
    std::set<std::vector<int>> members;
    for (const auto& iso : group) members.insert(iso.dart_map);
    CHECK(members.size() == group.size());
    for (const auto& a : group)
        for (const auto& b : group) CHECK(members.count(compose(a, b, g).dart_map) == 1);
    CHECK((2 * g.dart_count()) % static_cast<int>(group.size()) == 0);
}

TEST_CASE("spider tree with three distinct legs has trivial group") {
    // Legs of lengths 1, 2, 3 off one center: no leg swap, and no reflection
    // because the reversed rotation at the center does not match.
    PlaneGraph g = from_ccw_neighbors({{1, 2, 4}, {0}, {0, 3}, {2}, {0, 5}, {4, 6}, {5}});
    auto group = automorphism_group(g);
    CHECK(group.size() == 1);
    CHECK_FALSE(group[0].reversing);
}

TEST_CASE("dual exchanges faces and vertices; involution") {
    PlaneGraph g = theta();
    PlaneGraph d = dual_graph(g);
    CHECK(d.vertex_count() == 3);
    CHECK(d.edge_count() == 3);
    CHECK(d.face_count() == 2);
    PlaneGraph dd = dual_graph(d);
    CHECK(canonical_code(dd, CodeMode::PreserveOrientation) ==
          canonical_code(g, CodeMode::PreserveOrientation));

    // K4 is self-dual.
    CHECK(canonical_code(dual_graph(k4()), CodeMode::PreserveOrientation) ==
          canonical_code(k4(), CodeMode::PreserveOrientation));

    // Cube <-> octahedron.
    PlaneGraph o = dual_graph(cube());
    CHECK(o.vertex_count() == 6);
    CHECK(o.edge_count() == 12);
    CHECK(o.face_count() == 8);
    for (int v = 0; v < o.vertex_count(); ++v) CHECK(o.degree(v) == 4);
}

TEST_CASE("rot text round trip") {
    for (PlaneGraph g : {k4(), theta(), cube()}) {
        PlaneGraph h = parse_graph(to_rot_text(g));
        CHECK(canonical_code(h, CodeMode::PreserveOrientation) ==
              canonical_code(g, CodeMode::PreserveOrientation));
    }
}

TEST_CASE("subdivide and suppress are inverse") {
    for (PlaneGraph g : {k4(), theta(), cube()}) {
        PlaneGraph s = subdivide_all_edges(g);
        CHECK(s.vertex_count() == g.vertex_count() + g.edge_count());
        CHECK(s.edge_count() == 2 * g.edge_count());
        CHECK(s.face_count() == g.face_count());
        PlaneGraph back = suppress_degree_two(s);
        CHECK(canonical_code(back, CodeMode::PreserveOrientation) ==
              canonical_code(g, CodeMode::PreserveOrientation));
    }
}

TEST_CASE("json and dot exports mention the right pieces") {
    std::string j = to_json(theta());
    CHECK(j.find("\"darts\":6") != std::string::npos);
    CHECK(j.find("canonical_code") != std::string::npos);
    std::string d = to_dot(theta());
    CHECK(d.find("0 -- 1") != std::string::npos);
}
