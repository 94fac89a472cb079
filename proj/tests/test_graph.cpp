#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quon/planar_graph.hpp"

using namespace quon;

TEST_CASE("euler counts and genus of the built-in families") {
    auto c3 = cycle_graph(3);
    CHECK(c3.num_vertices() == 3);
    CHECK(c3.num_edges == 3);
    CHECK(c3.num_faces() == 2);
    CHECK(c3.genus() == 0);

    auto d4 = dipole_graph(4);
    CHECK(d4.num_vertices() == 2);
    CHECK(d4.num_edges == 4);
    CHECK(d4.num_faces() == 4);
    CHECK(d4.genus() == 0);

    for (int n = 1; n <= 6; ++n) {
        CHECK(cycle_graph(n).genus() == 0);
        CHECK(dipole_graph(n).genus() == 0);
    }
    for (int n = 2; n <= 6; ++n) {
        auto w = wheel_graph(n);
        CHECK(w.num_vertices() == n + 1);
        CHECK(w.num_edges == 2 * n);
        CHECK(w.num_faces() == n + 1);
        CHECK(w.genus() == 0);
    }

    auto cube = platonic("cube");
    CHECK(cube.num_vertices() == 8);
    CHECK(cube.num_edges == 12);
    CHECK(cube.num_faces() == 6);
    CHECK(cube.genus() == 0);

    auto oct = platonic("octahedron");
    CHECK(oct.num_vertices() == 6);
    CHECK(oct.num_edges == 12);
    CHECK(oct.num_faces() == 8);
    CHECK(oct.genus() == 0);
}

TEST_CASE("wheel_graph(3) is the tetrahedron") {
    CHECK(isomorphic_maps(wheel_graph(3), tetrahedron_graph()));
    auto t = tetrahedron_graph();
    CHECK(t.num_vertices() == 4);
    CHECK(t.num_edges == 6);
    CHECK(t.num_faces() == 4);
}

TEST_CASE("dual of the cycle is the dipole") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(isomorphic_maps(dual_graph(cycle_graph(n)), dipole_graph(n)));
        CHECK(isomorphic_maps(dual_graph(dipole_graph(n)), cycle_graph(n)));
    }
}

TEST_CASE("dual of dual is the identity map") {
    std::vector<PlanarGraph> gs = {cycle_graph(4),       dipole_graph(5),
                                   wheel_graph(2),       wheel_graph(3),
                                   wheel_graph(5),       tetrahedron_graph(),
                                   platonic("cube"),     platonic("octahedron")};
    for (const auto& g : gs) CHECK(isomorphic_maps(dual_graph(dual_graph(g)), g));
}

TEST_CASE("dual of the cube is the octahedron by degree sequences") {
    auto d = dual_graph(platonic("cube"));
    auto deg = [](const PlanarGraph& g) {
        std::vector<int> out;
        for (const auto& c : g.vertex_cycles()) out.push_back(static_cast<int>(c.size()));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(deg(d) == deg(platonic("octahedron")));
    CHECK(deg(dual_graph(platonic("octahedron"))) == deg(platonic("cube")));
}

TEST_CASE("dual tetrahedron is the rim/spoke swap relabeling") {
    auto t = tetrahedron_graph();
    auto d = dual_graph(t);
    // rim edge j becomes spoke n+j, spoke n+j becomes rim (j-1 mod n); with
    // the quarter-turn dual orientation no edge reversals are needed
    auto expected = relabel_edges(t, {3, 4, 5, 2, 0, 1});
    CHECK(isomorphic_maps(d, expected));
}

TEST_CASE("wheel duals are wheels under the rim/spoke swap") {
    for (int n = 2; n <= 6; ++n) {
        auto w = wheel_graph(n);
        auto d = dual_graph(w);
        std::vector<int> perm(2 * n);
        for (int j = 0; j < n; ++j) {
            perm[j] = n + j;
            perm[n + j] = (j + n - 1) % n;
        }
        CHECK(isomorphic_maps(d, relabel_edges(w, perm)));
    }
}

TEST_CASE("reverse_all_edges is an involution that keeps the map") {
    auto t = tetrahedron_graph();
    auto r = reverse_all_edges(t);
    CHECK_FALSE(isomorphic_maps(t, r)); // orientations differ
    CHECK(isomorphic_maps(reverse_all_edges(r), t));
    CHECK(r.rot == t.rot);
}

TEST_CASE("serialization round trip and errors") {
    auto w = wheel_graph(4);
    std::string s = serialize_map(w);
    PlanarGraph back;
    std::string err;
    REQUIRE(parse_map(s, back, err));
    CHECK(back.rot == w.rot);
    CHECK(back.head == w.head);
    CHECK(isomorphic_maps(back, w));

    PlanarGraph junk;
    CHECK_FALSE(parse_map("map\nedges 1\nrot 0 0\nhead 1\n", junk, err)); // not a perm
    CHECK_FALSE(parse_map("edges 1\nrot 1 0\nhead 1\n", junk, err));      // no magic
    CHECK_FALSE(parse_map("map\nedges 1\nrot 1 0\nhead 1\nbogus\n", junk, err));
    CHECK(err.find("bogus") != std::string::npos);
}

TEST_CASE("dual rejects higher genus") {
    // two vertices, two edges, rotations chosen so the map has genus 1
    PlanarGraph g;
    g.num_edges = 2;
    g.rot = {2, 3, 1, 0}; // single vertex with rotation (0 2 1 3)
    g.head = {1, 3};
    CHECK(g.genus() == 1);
    CHECK_THROWS(dual_graph(g));
}
