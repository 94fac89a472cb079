#include "quon/graphic_quons.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quon {

namespace {

size_t pow_size(int r, int n) {
    size_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<size_t>(r);
    return s;
}

} // namespace

void RationalFn::add_term(double pole, cplx num, double merge_tol) {
    for (auto& t : terms)
        if (std::abs(t.pole - pole) <= merge_tol) {
            t.num += num;
            return;
        }
    terms.push_back({pole, num});
}

cplx RationalFn::series_coeff(int g) const {
    // num/(pole - z) = sum_g num * pole^-(g+1) z^g
    cplx acc = 0.0;
    for (const auto& t : terms) acc += t.num * std::pow(t.pole, -(g + 1));
    return acc;
}

Quon ghz(const MtcData& m, int n, int g) {
    if (n < 0 || g < 0) throw std::invalid_argument("ghz: n, g >= 0");
    Quon q = Quon::zero(m, n);
    int r = m.rank();
    for (int x = 0; x < r; ++x) {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * r + x;
        q.coeffs[idx] = std::pow(m.d[x], 2 - n - 2 * g);
    }
    if (n == 0) {
        q.coeffs[0] = 0.0;
        for (int x = 0; x < r; ++x) q.coeffs[0] += std::pow(m.d[x], 2 - 2 * g);
    }
    return q;
}

long long brute_force_dim(const MtcData& m, std::span<const int> xvec, int g) {
    if (g < 0) throw std::invalid_argument("brute_force_dim: g >= 0");
    int r = m.rank();
    double cost = std::pow(static_cast<double>(r), g);
    if (cost > 1e7) throw std::invalid_argument("brute_force_dim: |Irr|^g guard exceeded");
    size_t total = pow_size(r, g);
    std::vector<int> word(xvec.begin(), xvec.end());
    size_t base = word.size();
    word.resize(base + 2 * static_cast<size_t>(g));
    long long acc = 0;
    for (size_t t = 0; t < total; ++t) {
        size_t rem = t;
        for (int i = 0; i < g; ++i) {
            int y = static_cast<int>(rem % r);
            rem /= r;
            word[base + i] = y;
            // theta_1 reverses the handle word and dualizes
            word[base + 2 * static_cast<size_t>(g) - 1 - i] = m.dual(y);
        }
        acc += fusion_dim_hom_unit(m, word);
    }
    return acc;
}

GenusDimTable genus_dim_table(const MtcData& m, int n, int gmax) {
    GenusDimTable t;
    t.n = n;
    t.gmax = gmax;
    t.rank = m.rank();
    size_t total = pow_size(t.rank, n);
    t.values.resize(total * (gmax + 1));
    std::vector<int> xvec(n);
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            xvec[i] = static_cast<int>(rem % t.rank);
            rem /= t.rank;
        }
        for (int g = 0; g <= gmax; ++g)
            t.values[idx * (gmax + 1) + g] = brute_force_dim(m, xvec, g);
    }
    return t;
}

Quon max_state(const MtcData& m, int n, int g) {
    Quon q = Quon::zero(m, n);
    int r = m.rank();
    double norm = std::pow(m.delta, 2 - n - 2 * g);
    std::vector<int> xvec(n);
    for (size_t idx = 0; idx < q.coeffs.size(); ++idx) {
        size_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            xvec[i] = static_cast<int>(rem % r);
            rem /= r;
        }
        long long dim = brute_force_dim(m, xvec, g);
        if (dim) q.coeffs[idx] = norm * static_cast<double>(dim);
    }
    return q;
}

VerificationReport check_max_equals_s_ghz(const MtcData& m, int n, int g, double tol) {
    VerificationReport rep;
    rep.name = "check_max_equals_s_ghz(" + m.name + ",n=" + std::to_string(n) +
               ",g=" + std::to_string(g) + ")";
    Quon lhs = max_state(m, n, g);
    Quon rhs = sft(m, ghz(m, n, g));
    double err = 0.0;
    for (size_t i = 0; i < lhs.coeffs.size(); ++i)
        err = std::max(err, std::abs(lhs.coeffs[i] - rhs.coeffs[i]));
    rep.add("max_equals_s_ghz", err <= tol, err);

    // integrality of the S-matrix side: dim(X,g) = sum_X prod_i S_{X_i}^X (S_X^1)^{2-n-2g}
    double ierr = 0.0;
    double norm = std::pow(m.delta, 2 - n - 2 * g);
    for (size_t i = 0; i < rhs.coeffs.size(); ++i) {
        cplx dim = rhs.coeffs[i] / norm;
        ierr = std::max(ierr, std::abs(dim - cplx(std::round(dim.real()))));
    }
    rep.add("s_matrix_side_integrality", ierr <= tol, ierr);
    return rep;
}

std::vector<RationalFn> ghz_genfun(const MtcData& m, int n) {
    int r = m.rank();
    std::vector<RationalFn> out(pow_size(r, n));
    for (int x = 0; x < r; ++x) {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * r + x;
        out[idx].add_term(m.d[x] * m.d[x], std::pow(m.d[x], 4 - n));
    }
    if (n == 0) {
        out[0] = RationalFn{};
        for (int x = 0; x < r; ++x)
            out[0].add_term(m.d[x] * m.d[x], std::pow(m.d[x], 4.0));
    }
    return out;
}

std::vector<RationalFn> max_genfun(const MtcData& m, int n) {
    int r = m.rank();
    std::vector<RationalFn> out(pow_size(r, n));
    std::vector<int> xvec(n);
    for (size_t idx = 0; idx < out.size(); ++idx) {
        size_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            xvec[i] = static_cast<int>(rem % r);
            rem /= r;
        }
        for (int x = 0; x < r; ++x) {
            cplx num = std::pow(m.d[x], 4 - n);
            for (int i = 0; i < n; ++i) num *= m.s(xvec[i], x);
            out[idx].add_term(m.d[x] * m.d[x], num);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// closed-network evaluator
// ---------------------------------------------------------------------------

namespace {

struct Net {
    struct Edge {
        int a = -1, b = -1; // dart ids
        int label = 0;
        bool alive = false;
    };
    std::vector<int> dedge, dvert;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> ring; // ccw dart order per vertex

    int new_vertex() {
        ring.emplace_back();
        return static_cast<int>(ring.size()) - 1;
    }
    int new_edge(int label) {
        edges.push_back({-1, -1, label, true});
        return static_cast<int>(edges.size()) - 1;
    }
    // creates a dart of edge e at vertex v (appended to the ring)
    int new_dart(int e, int v) {
        dedge.push_back(e);
        dvert.push_back(v);
        int d = static_cast<int>(dedge.size()) - 1;
        ring[v].push_back(d);
        if (edges[e].a < 0)
            edges[e].a = d;
        else
            edges[e].b = d;
        return d;
    }
    int other(int d) const {
        const Edge& e = edges[dedge[d]];
        return e.a == d ? e.b : e.a;
    }
    int degree(int v) const { return static_cast<int>(ring[v].size()); }
    void drop_dart(int d) {
        auto& r = ring[dvert[d]];
        r.erase(std::find(r.begin(), r.end(), d));
    }
    void drop_edge(int e) {
        drop_dart(edges[e].a);
        drop_dart(edges[e].b);
        edges[e].alive = false;
    }
    // replaces the two-dart path (o1)-(edge of o1) v (edge of o2)-(o2), where
    // v is being smoothed away, by a single edge carrying `label`
    void join(int o1, int o2, int label) {
        int e1 = dedge[o1], e2 = dedge[o2];
        edges[e1].a = o1;
        edges[e1].b = o2;
        edges[e1].label = label;
        dedge[o2] = e1;
        if (e2 != e1) edges[e2].alive = false;
    }
    int rot_next(int d) const {
        const auto& r = ring[dvert[d]];
        size_t i = std::find(r.begin(), r.end(), d) - r.begin();
        return r[(i + 1) % r.size()];
    }
    std::vector<std::vector<int>> faces() const {
        std::vector<char> seen(dedge.size(), 0);
        std::vector<std::vector<int>> out;
        for (size_t s = 0; s < dedge.size(); ++s) {
            if (seen[s] || !edges[dedge[s]].alive) continue;
            // skip darts no longer present in any ring
            const auto& r = ring[dvert[s]];
            if (std::find(r.begin(), r.end(), static_cast<int>(s)) == r.end()) continue;
            std::vector<int> cyc;
            int d = static_cast<int>(s);
            while (!seen[d]) {
                seen[d] = 1;
                cyc.push_back(d);
                d = rot_next(other(d));
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }
};

// admissibility of an unordered trivalent vertex triple (self-dual categories)
bool triple_ok(const MtcData& m, int a, int b, int c) {
    return m.ring.n(a, b, m.dual(c)) == 1;
}

// Reduces a closed labeled trivalent (degree <= 3) network to a scalar.
cplx evaluate_network(const MtcData& m, const RecouplingData& rc, Net net) {
    cplx acc = 1.0;
    auto dsq = [&](int label) { return std::sqrt(m.d[label]); };
    for (int guard = 0; guard < 10000; ++guard) {
        // done?
        bool any_edge = false;
        for (const auto& e : net.edges) any_edge = any_edge || e.alive;
        if (!any_edge) return acc;

        // degree-0 vertices are dropped implicitly (empty rings)

        // unit-labeled edge: delete it, the endpoints lose a leg
        {
            int target = -1;
            for (size_t e = 0; e < net.edges.size(); ++e)
                if (net.edges[e].alive && net.edges[e].label == 0) {
                    target = static_cast<int>(e);
                    break;
                }
            if (target >= 0) {
                net.drop_edge(target);
                continue;
            }
        }

        // degree-1 vertex with a non-unit edge: zero hom space
        {
            bool found = false;
            for (size_t v = 0; v < net.ring.size() && !found; ++v)
                if (net.degree(static_cast<int>(v)) == 1) found = true;
            if (found) return 0.0;
        }

        // degree-2 vertex smoothing
        {
            int v = -1;
            for (size_t i = 0; i < net.ring.size(); ++i)
                if (net.degree(static_cast<int>(i)) == 2) {
                    v = static_cast<int>(i);
                    break;
                }
            if (v >= 0) {
                int p1 = net.ring[v][0], p2 = net.ring[v][1];
                int e1 = net.dedge[p1], e2 = net.dedge[p2];
                int x = net.edges[e1].label;
                if (e1 == e2) { // circle through a single vertex
                    acc *= dsq(x);
                    net.ring[v].clear();
                    net.edges[e1].alive = false;
                    continue;
                }
                if (net.edges[e2].label != x) return 0.0;
                acc /= dsq(x);
                int o1 = net.other(p1), o2 = net.other(p2);
                net.ring[v].clear();
                if (o1 == p2) { // the two edges already formed a circle
                    acc *= m.d[x];
                    net.edges[e1].alive = false;
                    net.edges[e2].alive = false;
                } else {
                    net.join(o1, o2, x);
                }
                continue;
            }
        }

        // tadpole: self-loop at a trivalent vertex
        {
            int loop = -1;
            for (size_t e = 0; e < net.edges.size(); ++e) {
                const auto& ed = net.edges[e];
                if (ed.alive && net.dvert[ed.a] == net.dvert[ed.b] &&
                    net.degree(net.dvert[ed.a]) == 3) {
                    loop = static_cast<int>(e);
                    break;
                }
            }
            if (loop >= 0) {
                int v = net.dvert[net.edges[loop].a];
                int third = -1;
                for (int d : net.ring[v])
                    if (net.dedge[d] != loop) third = d;
                int ce = net.dedge[third];
                if (net.edges[ce].label != 0) return 0.0;
                acc *= dsq(net.edges[loop].label);
                net.ring[v].clear();
                net.edges[loop].alive = false;
                net.drop_dart(net.other(third)); // unit strand's far end
                net.edges[ce].alive = false;
                continue;
            }
        }

        // bigon and triangle faces
        auto faces = net.faces();
        std::sort(faces.begin(), faces.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        bool reduced = false;
        for (const auto& fc : faces) {
            if (fc.size() == 2) {
                int f1 = fc[0], f2 = fc[1];
                int e1 = net.dedge[f1], e2 = net.dedge[f2];
                if (e1 == e2) continue;
                int u = net.dvert[f1], w = net.dvert[f2];
                if (u == w || net.degree(u) != 3 || net.degree(w) != 3) continue;
                int x = net.edges[e1].label, y = net.edges[e2].label;
                int du = -1, dw = -1; // leg darts
                for (int d : net.ring[u])
                    if (net.dedge[d] != e1 && net.dedge[d] != e2) du = d;
                for (int d : net.ring[w])
                    if (net.dedge[d] != e1 && net.dedge[d] != e2) dw = d;
                int a = net.edges[net.dedge[du]].label;
                int b = net.edges[net.dedge[dw]].label;
                if (!triple_ok(m, x, y, a) || !triple_ok(m, x, y, b)) return 0.0;
                if (net.dedge[du] == net.dedge[dw]) { // theta component
                    acc *= 1.0; // normalized theta network
                    net.ring[u].clear();
                    net.ring[w].clear();
                    net.edges[e1].alive = false;
                    net.edges[e2].alive = false;
                    net.edges[net.dedge[du]].alive = false;
                } else {
                    if (a != b) return 0.0;
                    acc /= m.d[a];
                    int o1 = net.other(du), o2 = net.other(dw);
                    int lega = net.dedge[du], legb = net.dedge[dw];
                    net.ring[u].clear();
                    net.ring[w].clear();
                    net.edges[e1].alive = false;
                    net.edges[e2].alive = false;
                    // merge the two legs, reusing lega
                    net.edges[lega].a = o1;
                    net.edges[lega].b = o2;
                    net.dedge[o2] = lega;
                    if (legb != lega) net.edges[legb].alive = false;
                }
                reduced = true;
                break;
            }
            if (fc.size() == 3) {
                int f1 = fc[0], f2 = fc[1], f3 = fc[2];
                int t1 = net.dedge[f1], t2 = net.dedge[f2], t3 = net.dedge[f3];
                int a1 = net.dvert[f1], a2 = net.dvert[f2], a3 = net.dvert[f3];
                if (t1 == t2 || t2 == t3 || t1 == t3) continue;
                if (a1 == a2 || a2 == a3 || a1 == a3) continue;
                if (net.degree(a1) != 3 || net.degree(a2) != 3 || net.degree(a3) != 3)
                    continue;
                auto leg = [&](int v, int ea, int eb) {
                    for (int d : net.ring[v])
                        if (net.dedge[d] != ea && net.dedge[d] != eb) return d;
                    return -1;
                };
                int g1 = leg(a1, t1, t3), g2 = leg(a2, t1, t2), g3 = leg(a3, t2, t3);
                int L1 = net.edges[net.dedge[g1]].label;
                int L2 = net.edges[net.dedge[g2]].label;
                int L3 = net.edges[net.dedge[g3]].label;
                int x1 = net.edges[t1].label, x2 = net.edges[t2].label,
                    x3 = net.edges[t3].label;
                cplx f = rc.f(L1, L2, x2, x3, L3, x1);
                if (f == cplx(0.0)) return 0.0;
                acc *= f / (dsq(L3) * dsq(x1));
                // collapse the triangle to a single vertex; the rotation order
                // of the legs that keeps the sphere embedding is (g1, g3, g2)
                int w = net.new_vertex();
                net.ring[a1].clear();
                net.ring[a2].clear();
                net.ring[a3].clear();
                net.edges[t1].alive = false;
                net.edges[t2].alive = false;
                net.edges[t3].alive = false;
                for (int gdart : {g1, g3, g2}) {
                    net.dvert[gdart] = w;
                    net.ring[w].push_back(gdart);
                }
                reduced = true;
                break;
            }
        }
        if (reduced) continue;
        throw std::runtime_error("evaluate_network: unsupported configuration");
    }
    throw std::runtime_error("evaluate_network: reduction did not terminate");
}

// The evaluator state: trivalent expansion of the labeled graph plus the list
// of internal (summed) edges.
struct Expansion {
    Net base;
    std::vector<int> internal_edges;
};

Expansion expand_graph(const PlanarGraph& g, int comb) {
    Expansion ex;
    Net& net = ex.base;
    auto vcyc = g.vertex_cycles();
    // map graph darts to net darts after building
    std::vector<int> edge_of(g.num_edges);
    for (int j = 0; j < g.num_edges; ++j) edge_of[j] = net.new_edge(0);
    for (const auto& cyc : vcyc) {
        int k = static_cast<int>(cyc.size());
        if (k <= 3) {
            int v = net.new_vertex();
            for (int d : cyc) net.new_dart(edge_of[d / 2], v);
            continue;
        }
        // comb the >=4-valent vertex into a planar fusion tree; start the
        // rotation order at the lowest-ordered incident edge, shifted by comb
        std::vector<int> order(cyc);
        size_t lo = 0;
        for (size_t i = 1; i < order.size(); ++i)
            if (order[i] / 2 < order[lo] / 2) lo = i;
        std::rotate(order.begin(), order.begin() + lo, order.end());
        std::rotate(order.begin(),
                    order.begin() + (comb % k + k) % k, order.end());
        // w_1 = (d1, d2, i1bar); w_t = (i_{t-1}, d_{t+1}, i_t);
        // w_{k-2} = (i_{k-3}, d_{k-1}, d_k)
        int prev_internal = -1;
        for (int t = 0; t + 2 < k; ++t) {
            int w = net.new_vertex();
            if (t == 0) {
                net.new_dart(edge_of[order[0] / 2], w);
                net.new_dart(edge_of[order[1] / 2], w);
            } else {
                net.new_dart(prev_internal, w);
                net.new_dart(edge_of[order[t + 1] / 2], w);
            }
            if (t + 3 < k) {
                int ie = net.new_edge(0);
                ex.internal_edges.push_back(ie);
                net.new_dart(ie, w);
                prev_internal = ie;
            } else {
                net.new_dart(edge_of[order[k - 1] / 2], w);
            }
        }
    }
    return ex;
}

} // namespace

double graph_coefficient(const MtcData& m, const RecouplingData& rc,
                         const PlanarGraph& g, std::span<const int> labels, int comb) {
    if (!m.multiplicity_free())
        throw std::invalid_argument("graph_coefficient: multiplicity-free categories only");
    for (int x = 0; x < m.rank(); ++x)
        if (m.dual(x) != x)
            throw std::invalid_argument(
                "graph_coefficient: network evaluator supports self-dual categories only");
    if (static_cast<int>(labels.size()) != g.num_edges)
        throw std::invalid_argument("graph_coefficient: one label per edge required");
    if (g.genus() != 0)
        throw std::invalid_argument("graph_coefficient: genus-0 graphs only");

    double prefactor = 1.0;
    for (const auto& cyc : g.vertex_cycles())
        prefactor *= std::pow(m.delta, 1.0 - static_cast<double>(cyc.size()) / 2.0);

    Expansion ex = expand_graph(g, comb);
    for (int j = 0; j < g.num_edges; ++j) ex.base.edges[j].label = labels[j];

    int r = m.rank();
    size_t assignments = pow_size(r, static_cast<int>(ex.internal_edges.size()));
    double total = 0.0;
    for (size_t t = 0; t < assignments; ++t) {
        size_t rem = t;
        Net net = ex.base;
        // a comb-tree vector with internal label i has norm 1/sqrt(d(i));
        // weighting by d(i) per internal edge makes the basis orthonormal
        double weight = 1.0;
        for (int ie : ex.internal_edges) {
            int lab = static_cast<int>(rem % r);
            net.edges[ie].label = lab;
            weight *= m.d[lab];
            rem /= r;
        }
        cplx z = evaluate_network(m, rc, std::move(net));
        total += weight * std::norm(z);
    }
    return prefactor * total;
}

std::vector<double> graph_coefficient_table(const MtcData& m, const RecouplingData& rc,
                                            const PlanarGraph& g, int comb) {
    int r = m.rank();
    int n = g.num_edges;
    size_t total = pow_size(r, n);
    std::vector<double> out(total);
    std::vector<int> labels(n);
    for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            labels[i] = static_cast<int>(rem % r);
            rem /= r;
        }
        out[idx] = graph_coefficient(m, rc, g, labels, comb);
    }
    return out;
}

VerificationReport check_graph_duality(const MtcData& m, const RecouplingData& rc,
                                       const PlanarGraph& g, double tol) {
    VerificationReport rep;
    rep.name = "check_graph_duality(" + m.name + ")";
    PlanarGraph dg = dual_graph(g);
    std::vector<double> primal = graph_coefficient_table(m, rc, g);
    std::vector<double> dual = graph_coefficient_table(m, rc, dg);

    Quon q = Quon::zero(m, g.num_edges);
    for (size_t i = 0; i < primal.size(); ++i) q.coeffs[i] = primal[i];
    Quon sq = sft(m, q);

    double err = 0.0;
    for (size_t i = 0; i < dual.size(); ++i)
        err = std::max(err, std::abs(sq.coeffs[i] - cplx(dual[i])));
    rep.add("dual_coefficients_equal_s_transform", err <= tol, err,
            "edges=" + std::to_string(g.num_edges));
    return rep;
}

} // namespace quon
