#include "quon/recoupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quon {

namespace {

constexpr double pi = std::numbers::pi;

struct QTables {
    int k;
    std::vector<double> qint;  // [n] = sin(n pi/(k+2))/sin(pi/(k+2))
    std::vector<double> qfact; // [n]! with the natural zero at n >= k+2
};

QTables make_qtables(int k) {
    QTables t;
    t.k = k;
    int top = 2 * k + 6;
    t.qint.resize(top + 1);
    t.qfact.resize(top + 1);
    double den = std::sin(pi / (k + 2));
    t.qint[0] = 0.0;
    t.qfact[0] = 1.0;
    for (int n = 1; n <= top; ++n) {
        t.qint[n] = std::sin(n * pi / (k + 2)) / den;
        t.qfact[n] = t.qfact[n - 1] * t.qint[n];
    }
    return t;
}

bool su2_admissible(int k, int a, int b, int c) {
    return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b &&
           a + b + c <= 2 * k;
}

// sqrt of the triangle coefficient, positive for admissible triples
double tri_delta(const QTables& t, int a, int b, int c) {
    return std::sqrt(t.qfact[(-a + b + c) / 2] * t.qfact[(a - b + c) / 2] *
                     t.qfact[(a + b - c) / 2] / t.qfact[(a + b + c) / 2 + 1]);
}

// Unitary-gauge F symbol for SU(2)_k (twice-spin labels). Unit-strand blocks
// come out exactly +1 and every block is real orthogonal.
double su2_f(const QTables& t, int a, int b, int c, int d, int e, int f) {
    int k = t.k;
    if (!su2_admissible(k, a, b, e) || !su2_admissible(k, e, c, d) ||
        !su2_admissible(k, b, c, f) || !su2_admissible(k, a, f, d))
        return 0.0;
    int T1 = (a + b + e) / 2, T2 = (e + c + d) / 2, T3 = (b + c + f) / 2,
        T4 = (a + f + d) / 2;
    int Q1 = (a + b + c + d) / 2, Q2 = (a + e + c + f) / 2, Q3 = (b + e + d + f) / 2;
    int zlo = std::max(std::max(T1, T2), std::max(T3, T4));
    int zhi = std::min(Q1, std::min(Q2, Q3));
    double sum = 0.0;
    for (int z = zlo; z <= zhi; ++z) {
        if (z + 1 >= k + 2) continue; // [z+1]! = 0 past the level truncation
        double term = t.qfact[z + 1] /
                      (t.qfact[z - T1] * t.qfact[z - T2] * t.qfact[z - T3] *
                       t.qfact[z - T4] * t.qfact[Q1 - z] * t.qfact[Q2 - z] *
                       t.qfact[Q3 - z]);
        sum += (z % 2 == 0) ? term : -term;
    }
    double pref = (Q1 % 2 == 0) ? 1.0 : -1.0;
    return pref * std::sqrt(t.qint[e + 1] * t.qint[f + 1]) * tri_delta(t, a, b, e) *
           tri_delta(t, e, c, d) * tri_delta(t, b, c, f) * tri_delta(t, a, f, d) * sum;
}

// Builds the rank^6 table for the image of the label map lab (su2 label of
// each category label) at SU(2) level k.
RecouplingData build_from_su2(const MtcData& m, int k, const std::vector<int>& lab) {
    RecouplingData r;
    r.category = m;
    int n = m.rank();
    QTables t = make_qtables(k);
    r.F.assign(static_cast<size_t>(n) * n * n * n * n * n, 0.0);
    size_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e)
                        for (int f = 0; f < n; ++f)
                            r.F[idx++] = su2_f(t, lab[a], lab[b], lab[c], lab[d],
                                               lab[e], lab[f]);
    r.theta.assign(static_cast<size_t>(n) * n * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.admissible(a, b, c))
                    r.theta[(static_cast<size_t>(a) * n + b) * n + c] =
                        std::abs(kl_theta(k, lab[a], lab[b], lab[c]));
    return r;
}

} // namespace

double kl_qint(int k, int n) {
    return std::sin(n * pi / (k + 2)) / std::sin(pi / (k + 2));
}

double kl_theta(int k, int a, int b, int c) {
    if (!su2_admissible(k, a, b, c)) return 0.0;
    QTables t = make_qtables(k);
    int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    double v = t.qfact[m + n + p + 1] * t.qfact[m] * t.qfact[n] * t.qfact[p] /
               (t.qfact[m + n] * t.qfact[n + p] * t.qfact[p + m]);
    return ((m + n + p) % 2 == 0) ? v : -v;
}

double kl_tet(int k, const std::array<int, 6>& L) {
    // KL ordering Tet[A B E; C D F], vertex triples {A,D,E},{B,C,E},{A,B,F},{C,D,F}
    int A = L[0], B = L[1], E = L[2], C = L[3], D = L[4], F = L[5];
    if (!su2_admissible(k, A, D, E) || !su2_admissible(k, B, C, E) ||
        !su2_admissible(k, A, B, F) || !su2_admissible(k, C, D, F))
        return 0.0;
    QTables t = make_qtables(k);
    int a1 = (A + D + E) / 2, a2 = (B + C + E) / 2, a3 = (A + B + F) / 2,
        a4 = (C + D + F) / 2;
    int b1 = (B + D + E + F) / 2, b2 = (A + C + E + F) / 2, b3 = (A + B + C + D) / 2;
    std::array<int, 4> av = {a1, a2, a3, a4};
    std::array<int, 3> bv = {b1, b2, b3};
    double interior = 1.0;
    for (int bj : bv)
        for (int ai : av) interior *= t.qfact[bj - ai];
    double ext = t.qfact[A] * t.qfact[B] * t.qfact[C] * t.qfact[D] * t.qfact[E] *
                 t.qfact[F];
    int zlo = std::max(std::max(a1, a2), std::max(a3, a4));
    int zhi = std::min(b1, std::min(b2, b3));
    double sum = 0.0;
    for (int z = zlo; z <= zhi; ++z) {
        if (z + 1 >= k + 2) continue;
        double term = t.qfact[z + 1];
        for (int ai : av) term /= t.qfact[z - ai];
        for (int bj : bv) term /= t.qfact[bj - z];
        sum += (z % 2 == 0) ? term : -term;
    }
    return interior / ext * sum;
}

RecouplingData build_recoupling(const MtcData& m) {
    if (!m.multiplicity_free())
        throw std::invalid_argument("build_recoupling: category has fusion multiplicity > 1");
    RecouplingData r;
    if (m.name == "fibonacci") {
        r = build_from_su2(m, 3, {0, 2}); // even part of SU(2)_3
    } else if (m.name == "ising") {
        r = build_from_su2(m, 2, {0, 1, 2});
    } else if (m.name.rfind("su2_", 0) == 0) {
        int k = std::stoi(m.name.substr(4));
        if (m.rank() > 12)
            throw std::invalid_argument("build_recoupling: su2 level too large for dense tables");
        std::vector<int> lab(m.rank());
        for (int a = 0; a < m.rank(); ++a) lab[a] = a;
        r = build_from_su2(m, k, lab);
    } else {
        throw std::invalid_argument("build_recoupling: no built-in F data for " + m.name);
    }
    VerificationReport rep = validate_recoupling(r, 1e-9);
    if (!rep.passed())
        throw std::runtime_error("build_recoupling: validation failed for " + m.name);
    return r;
}

RecouplingData build_recoupling_from_table(const MtcData& m, std::vector<cplx> F,
                                           double tol) {
    if (!m.multiplicity_free())
        throw std::invalid_argument("recoupling: category has fusion multiplicity > 1");
    int n = m.rank();
    size_t want = 1;
    for (int i = 0; i < 6; ++i) want *= static_cast<size_t>(n);
    if (F.size() != want) throw std::invalid_argument("recoupling: F table size mismatch");
    RecouplingData r;
    r.category = m;
    r.F = std::move(F);
    r.theta.assign(static_cast<size_t>(n) * n * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.admissible(a, b, c))
                    r.theta[(static_cast<size_t>(a) * n + b) * n + c] = 1.0;
    VerificationReport rep = validate_recoupling(r, tol);
    if (!rep.passed())
        throw std::runtime_error("recoupling: user F table failed validation");
    return r;
}

VerificationReport validate_recoupling(const RecouplingData& r, double tol) {
    VerificationReport rep;
    rep.name = "validate_recoupling(" + r.category.name + ")";
    const MtcData& m = r.category;
    int n = m.rank();

    rep.add("multiplicity_free", m.multiplicity_free(), 0.0);

    // e a fusion channel of a x b
    auto channel = [&](int a, int b, int e) { return m.ring.n(a, b, e) == 1; };

    // unit-strand blocks are identity
    double uerr = 0.0;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
                if (channel(b, c, d))
                    uerr = std::max({uerr, std::abs(r.f(0, b, c, d, b, d) - 1.0),
                                     std::abs(r.f(b, 0, c, d, b, c) - 1.0),
                                     std::abs(r.f(b, c, 0, d, d, c) - 1.0),
                                     std::abs(r.f(b, c, m.dual(d), 0, d, m.dual(b))
                                              - 1.0)});
    rep.add("unit_blocks_identity", uerr <= tol, uerr);

    // theta positive on admissible triples
    bool tpos = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.admissible(a, b, c) && !(r.th(a, b, c) > 0.0)) tpos = false;
    rep.add("theta_positive", tpos, 0.0);

    // unitarity of each F block on its admissible range
    double oerr = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e1 = 0; e1 < n; ++e1) {
                        if (!(channel(a, b, e1) && channel(e1, c, d))) continue;
                        for (int e2 = 0; e2 < n; ++e2) {
                            if (!(channel(a, b, e2) && channel(e2, c, d)))
                                continue;
                            cplx acc = 0.0;
                            for (int f = 0; f < n; ++f)
                                acc += r.f(a, b, c, d, e1, f) *
                                       std::conj(r.f(a, b, c, d, e2, f));
                            cplx want = (e1 == e2) ? cplx(1.0) : cplx(0.0);
                            oerr = std::max(oerr, std::abs(acc - want));
                        }
                    }
    rep.add("F_blocks_unitary", oerr <= tol, oerr);

    // pentagon identity; exhaustive for rank <= 6, strided sample beyond
    double perr = 0.0;
    size_t total = 1;
    for (int i = 0; i < 5; ++i) total *= static_cast<size_t>(n);
    size_t step = (n <= 6) ? 1 : std::max<size_t>(1, total / 20000);
    for (size_t t = 0; t < total; t += step) {
        size_t rem = t;
        int e = static_cast<int>(rem % n); rem /= n;
        int d = static_cast<int>(rem % n); rem /= n;
        int c = static_cast<int>(rem % n); rem /= n;
        int b = static_cast<int>(rem % n); rem /= n;
        int a = static_cast<int>(rem % n);
        for (int f = 0; f < n; ++f) {
            if (!channel(a, b, f)) continue;
            for (int g = 0; g < n; ++g) {
                if (!channel(g, d, e)) continue;
                for (int l = 0; l < n; ++l) {
                    if (!channel(c, d, l)) continue;
                    for (int kk = 0; kk < n; ++kk) {
                        if (!channel(a, kk, e)) continue;
                        cplx lhs = r.f(f, c, d, e, g, l) * r.f(a, b, l, e, f, kk);
                        cplx rhs = 0.0;
                        for (int h = 0; h < n; ++h)
                            rhs += r.f(a, b, c, g, f, h) * r.f(a, h, d, e, g, kk) *
                                   r.f(b, c, d, kk, h, l);
                        perr = std::max(perr, std::abs(lhs - rhs));
                    }
                }
            }
        }
    }
    rep.add(n <= 6 ? "pentagon_exhaustive" : "pentagon_sampled", perr <= tol, perr);
    return rep;
}

double normalized_tet_squared(const RecouplingData& r, const std::array<int, 6>& L) {
    // edges 1..6 of the tetrahedron as stored in L[0..5]; vertex triples
    // {1,3,4},{1,2,5},{2,3,6},{4,5,6}
    int x1 = L[0], x2 = L[1], x3 = L[2], x4 = L[3], x5 = L[4], x6 = L[5];
    if (!r.admissible(x1, x3, x4) || !r.admissible(x1, x2, x5) ||
        !r.admissible(x2, x3, x6) || !r.admissible(x4, x5, x6))
        return 0.0;
    cplx v = r.f(x3, x1, x5, x6, x4, x2);
    return std::norm(v) / (r.category.d[x4] * r.category.d[x2]);
}

} // namespace quon
