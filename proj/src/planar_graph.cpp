#include "quon/planar_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace quon {

namespace {

std::vector<std::vector<int>> perm_cycles(const std::vector<int>& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.size(), 0);
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int d = static_cast<int>(s);
        while (!seen[d]) {
            seen[d] = 1;
            cyc.push_back(d);
            d = p[d];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

} // namespace

bool PlanarGraph::valid() const {
    int nd = dart_count();
    if (static_cast<int>(rot.size()) != nd) return false;
    std::vector<char> hit(nd, 0);
    for (int d : rot) {
        if (d < 0 || d >= nd || hit[d]) return false;
        hit[d] = 1;
    }
    if (static_cast<int>(head.size()) != num_edges) return false;
    for (int j = 0; j < num_edges; ++j)
        if (head[j] != 2 * j && head[j] != 2 * j + 1) return false;
    return true;
}

std::vector<std::vector<int>> PlanarGraph::vertex_cycles() const {
    return perm_cycles(rot);
}

std::vector<std::vector<int>> PlanarGraph::face_cycles() const {
    std::vector<int> fp(dart_count());
    for (int d = 0; d < dart_count(); ++d) fp[d] = rot[pair_dart(d)];
    return perm_cycles(fp);
}

int PlanarGraph::genus() const {
    int v = num_vertices(), e = num_edges, f = num_faces();
    int chi = v - e + f;
    if (chi > 2 || (2 - chi) % 2 != 0)
        throw std::runtime_error("genus: inconsistent combinatorial map");
    return (2 - chi) / 2;
}

int PlanarGraph::vertex_of(int dart) const {
    auto vc = vertex_cycles();
    for (size_t i = 0; i < vc.size(); ++i)
        for (int d : vc[i])
            if (d == dart) return static_cast<int>(i);
    throw std::out_of_range("vertex_of: bad dart");
}

PlanarGraph cycle_graph(int n) {
    if (n < 1) throw std::invalid_argument("cycle_graph: n >= 1");
    PlanarGraph g;
    g.num_edges = n;
    g.rot.assign(2 * n, 0);
    g.head.resize(n);
    // edge j runs v_j -> v_{j+1}; at v_j the two darts are tail 2j and the
    // head dart of edge j-1
    for (int j = 0; j < n; ++j) {
        int prev_head = 2 * ((j - 1 + n) % n) + 1;
        g.rot[2 * j] = prev_head;
        g.rot[prev_head] = 2 * j;
        g.head[j] = 2 * j + 1;
    }
    return g;
}

PlanarGraph dipole_graph(int n) {
    if (n < 1) throw std::invalid_argument("dipole_graph: n >= 1");
    PlanarGraph g;
    g.num_edges = n;
    g.rot.assign(2 * n, 0);
    g.head.resize(n);
    // all edges run u -> w; tails counterclockwise in edge order at u, heads
    // in reversed order at w (planar embedding)
    for (int j = 0; j < n; ++j) {
        g.rot[2 * j] = 2 * ((j + 1) % n);
        g.rot[2 * j + 1] = 2 * ((j - 1 + n) % n) + 1;
        g.head[j] = 2 * j + 1;
    }
    return g;
}

PlanarGraph wheel_graph(int n) {
    if (n < 2) throw std::invalid_argument("wheel_graph: n >= 2");
    PlanarGraph g;
    g.num_edges = 2 * n;
    g.rot.assign(4 * n, 0);
    g.head.resize(2 * n);
    // rim edge j: v_j -> v_{j+1}; spoke edge n+j: hub -> v_j.
    // hub rotation: spoke tails counterclockwise; rim vertex v_j rotation
    // (ccw): rim-j tail, spoke-j head, rim-(j-1) head.
    for (int j = 0; j < n; ++j) {
        int rim_tail = 2 * j;
        int rim_prev_head = 2 * ((j - 1 + n) % n) + 1;
        int spoke_tail = 2 * (n + j);
        int spoke_head = 2 * (n + j) + 1;
        g.rot[spoke_tail] = 2 * (n + (j + 1) % n);
        g.rot[rim_tail] = spoke_head;
        g.rot[spoke_head] = rim_prev_head;
        g.rot[rim_prev_head] = rim_tail;
        g.head[j] = 2 * j + 1;
        g.head[n + j] = spoke_head;
    }
    return g;
}

PlanarGraph tetrahedron_graph() { return wheel_graph(3); }

namespace {

// Builds a map from vertex adjacency lists given in counterclockwise order;
// entry (vertex, slot) pairs are matched through `edges` = list of
// ((v,slot),(v,slot)) with the first endpoint the tail.
struct MapBuilder {
    struct End {
        int vertex;
        int slot;
    };
    std::vector<std::pair<End, End>> edges;
    std::vector<int> degree; // slots per vertex

    PlanarGraph build() const {
        int ne = static_cast<int>(edges.size());
        // dart sitting at (v, slot)
        std::vector<std::vector<int>> at(degree.size());
        for (size_t v = 0; v < degree.size(); ++v) at[v].assign(degree[v], -1);
        for (int j = 0; j < ne; ++j) {
            at[edges[j].first.vertex][edges[j].first.slot] = 2 * j;
            at[edges[j].second.vertex][edges[j].second.slot] = 2 * j + 1;
        }
        PlanarGraph g;
        g.num_edges = ne;
        g.rot.assign(2 * ne, -1);
        g.head.resize(ne);
        for (int j = 0; j < ne; ++j) g.head[j] = 2 * j + 1;
        for (size_t v = 0; v < at.size(); ++v)
            for (int s = 0; s < degree[v]; ++s) {
                if (at[v][s] < 0) throw std::logic_error("MapBuilder: unfilled slot");
                g.rot[at[v][s]] = at[v][(s + 1) % degree[v]];
            }
        return g;
    }
};

PlanarGraph cube_graph() {
    // outer square o0..o3 (vertices 0..3, ccw), inner square i0..i3 (4..7).
    // edge order: outer 0..3, inner 4..7, pillars 8..11 (o_j -> i_j).
    // ccw slots: o_j = (to o_{j+1}, to i_j, to o_{j-1});
    //            i_j = (to o_j, to i_{j+1}, to i_{j-1})
    MapBuilder b;
    b.degree.assign(8, 3);
    b.edges.resize(12);
    for (int j = 0; j < 4; ++j) {
        int jn = (j + 1) % 4;
        b.edges[j] = {{j, 0}, {jn, 2}};          // outer o_j -> o_{j+1}
        b.edges[4 + j] = {{4 + j, 1}, {4 + jn, 2}}; // inner i_j -> i_{j+1}
        b.edges[8 + j] = {{j, 1}, {4 + j, 0}};   // pillar o_j -> i_j
    }
    return b.build();
}

PlanarGraph octahedron_graph() {
    // outer triangle a0..a2 (vertices 0..2), inner triangle b0..b2 (3..5),
    // drawn as an antiprism. edge order: outer 0..2, inner 3..5, then the six
    // cross edges a_j->b_j (6..8) and a_j->b_{j-1} (9..11).
    // ccw slots: a_j = (a_{j+1}, b_j, b_{j-1}, a_{j-1});
    //            b_j = (a_{j+1}, b_{j+1}, b_{j+2}, a_j)
    MapBuilder b;
    b.degree.assign(6, 4);
    b.edges.resize(12);
    for (int j = 0; j < 3; ++j) {
        int jn = (j + 1) % 3;
        int jp = (j + 2) % 3;
        b.edges[j] = {{j, 0}, {jn, 3}};           // outer a_j -> a_{j+1}
        b.edges[3 + j] = {{3 + j, 1}, {3 + jn, 2}}; // inner b_j -> b_{j+1}
        b.edges[6 + j] = {{j, 1}, {3 + j, 3}};    // a_j -> b_j
        b.edges[9 + j] = {{j, 2}, {3 + jp, 0}};   // a_j -> b_{j-1}
    }
    return b.build();
}

} // namespace

PlanarGraph platonic(const std::string& name) {
    if (name == "tetrahedron") return tetrahedron_graph();
    if (name == "cube") return cube_graph();
    if (name == "octahedron") return octahedron_graph();
    throw std::invalid_argument("platonic: unsupported solid " + name);
}

PlanarGraph dual_graph(const PlanarGraph& g) {
    if (!g.valid()) throw std::invalid_argument("dual_graph: invalid map");
    if (g.genus() != 0)
        throw std::invalid_argument("dual_graph: embedding is not local (genus > 0)");
    PlanarGraph d;
    d.num_edges = g.num_edges;
    d.rot.resize(g.dart_count());
    // faces become vertices: the face permutation is the dual rotation
    for (int x = 0; x < g.dart_count(); ++x) d.rot[x] = g.rot[PlanarGraph::pair_dart(x)];
    // quarter-turn orientation rule: the dual head dart is the primal head dart
    d.head = g.head;
    return d;
}

PlanarGraph reverse_all_edges(PlanarGraph g) {
    for (int& h : g.head) h ^= 1;
    return g;
}

PlanarGraph reverse_edge(PlanarGraph g, int edge) {
    if (edge < 0 || edge >= g.num_edges) throw std::out_of_range("reverse_edge");
    g.head[edge] ^= 1;
    return g;
}

PlanarGraph relabel_edges(const PlanarGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.num_edges)
        throw std::invalid_argument("relabel_edges: bad permutation size");
    auto rename = [&](int d) { return 2 * perm[d / 2] + (d & 1); };
    PlanarGraph h;
    h.num_edges = g.num_edges;
    h.rot.assign(g.dart_count(), -1);
    h.head.assign(g.num_edges, -1);
    for (int d = 0; d < g.dart_count(); ++d) h.rot[rename(d)] = rename(g.rot[d]);
    for (int j = 0; j < g.num_edges; ++j) h.head[perm[j]] = rename(g.head[j]);
    if (!h.valid()) throw std::invalid_argument("relabel_edges: not a permutation");
    return h;
}

bool isomorphic_maps(const PlanarGraph& a, const PlanarGraph& b) {
    if (a.num_edges != b.num_edges) return false;
    if (!a.valid() || !b.valid()) return false;
    // the bijection is forced: edge j of a maps to edge j of b, head to head
    std::vector<int> phi(a.dart_count());
    for (int j = 0; j < a.num_edges; ++j) {
        phi[a.head[j]] = b.head[j];
        phi[PlanarGraph::pair_dart(a.head[j])] = PlanarGraph::pair_dart(b.head[j]);
    }
    for (int d = 0; d < a.dart_count(); ++d)
        if (phi[a.rot[d]] != b.rot[phi[d]]) return false;
    return true;
}

std::string serialize_map(const PlanarGraph& g) {
    std::ostringstream os;
    os << "map\n";
    os << "edges " << g.num_edges << "\n";
    os << "rot";
    for (int d : g.rot) os << ' ' << d;
    os << "\nhead";
    for (int h : g.head) os << ' ' << h;
    os << "\n";
    return os.str();
}

bool parse_map(const std::string& text, PlanarGraph& out, std::string& err) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_magic = false, saw_edges = false, saw_rot = false, saw_head = false;
    PlanarGraph g;
    while (std::getline(is, line)) {
        ++lineno;
        auto hashpos = line.find('#');
        if (hashpos != std::string::npos) line.erase(hashpos);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "map") {
            saw_magic = true;
        } else if (key == "edges") {
            if (!(ls >> g.num_edges) || g.num_edges < 0) {
                err = "line " + std::to_string(lineno) + ": bad edge count";
                return false;
            }
            saw_edges = true;
        } else if (key == "rot") {
            int d;
            while (ls >> d) g.rot.push_back(d);
            saw_rot = true;
        } else if (key == "head") {
            int d;
            while (ls >> d) g.head.push_back(d);
            saw_head = true;
        } else {
            err = "line " + std::to_string(lineno) + ": unknown keyword '" + key + "'";
            return false;
        }
    }
    if (!saw_magic || !saw_edges || !saw_rot || !saw_head) {
        err = "missing section (need map/edges/rot/head)";
        return false;
    }
    if (!g.valid()) {
        err = "inconsistent map data (rot not a permutation of 2*edges darts, or bad head darts)";
        return false;
    }
    out = std::move(g);
    return true;
}

} // namespace quon
