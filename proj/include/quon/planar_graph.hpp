#pragma once

#include <string>
#include <vector>

namespace quon {

// Combinatorial map with ordered, oriented edges. Edge j owns darts 2j and
// 2j+1; the edge pairing is d <-> d^1. rot[d] is the next dart
// counterclockwise around the vertex of d; head[j] in {2j, 2j+1} marks the
// dart sitting at the edge's head vertex.
struct PlanarGraph {
    int num_edges = 0;
    std::vector<int> rot;
    std::vector<int> head;

    int dart_count() const { return 2 * num_edges; }
    static int pair_dart(int d) { return d ^ 1; }

    std::vector<std::vector<int>> vertex_cycles() const;
    std::vector<std::vector<int>> face_cycles() const; // next = rot[pair(d)]
    int num_vertices() const { return static_cast<int>(vertex_cycles().size()); }
    int num_faces() const { return static_cast<int>(face_cycles().size()); }
    int genus() const;
    int vertex_of(int dart) const; // index into vertex_cycles()
    bool valid() const;
};

PlanarGraph cycle_graph(int n);  // n >= 1
PlanarGraph dipole_graph(int n); // n >= 1
PlanarGraph wheel_graph(int n);  // n >= 2: rim edges 0..n-1 ccw, spokes n..2n-1 outward
PlanarGraph tetrahedron_graph(); // wheel_graph(3) with the angular edge order
PlanarGraph platonic(const std::string& name); // tetrahedron | cube | octahedron

// Faces become vertices, edge order preserved edge-wise, dual edge oriented by
// a quarter turn counterclockwise; requires genus 0.
PlanarGraph dual_graph(const PlanarGraph& g);

PlanarGraph reverse_all_edges(PlanarGraph g);
PlanarGraph reverse_edge(PlanarGraph g, int edge);

// perm[old_index] = new_index
PlanarGraph relabel_edges(const PlanarGraph& g, const std::vector<int>& perm);

// Isomorphism of ordered oriented maps: the dart bijection is forced by the
// edge order and orientations, so this is a linear-time structural check.
bool isomorphic_maps(const PlanarGraph& a, const PlanarGraph& b);

std::string serialize_map(const PlanarGraph& g);
// Returns false and fills err (with line info) on malformed input.
bool parse_map(const std::string& text, PlanarGraph& out, std::string& err);

} // namespace quon
