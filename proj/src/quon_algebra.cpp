#include "quon/quon_algebra.hpp"

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

void require_same(const MtcData& m, const Quon& x, const Quon& y) {
    if (x.rank != m.rank() || y.rank != m.rank())
        throw std::invalid_argument("quon/category rank mismatch");
    if (x.order != y.order) throw std::invalid_argument("quon order mismatch");
}

// Apply a rank x rank matrix to tensor slot `slot` of x.
Quon apply_slot_matrix(const std::vector<cplx>& A, const Quon& x, int slot) {
    int r = x.rank;
    Quon out = x;
    size_t inner = pow_size(r, x.order - 1 - slot);
    size_t outer = pow_size(r, slot);
    size_t block = inner * static_cast<size_t>(r);
    std::vector<cplx> tmp(r);
    for (size_t o = 0; o < outer; ++o)
        for (size_t i = 0; i < inner; ++i) {
            size_t base = o * block + i;
            for (int a = 0; a < r; ++a) {
                cplx acc = 0.0;
                for (int b = 0; b < r; ++b)
                    acc += A[static_cast<size_t>(a) * r + b] * x.coeffs[base + b * inner];
                tmp[a] = acc;
            }
            for (int a = 0; a < r; ++a) out.coeffs[base + a * inner] = tmp[a];
        }
    return out;
}

// splitmix64, for seeded reproducible pseudorandom coefficients
std::uint64_t next_u64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double next_unit(std::uint64_t& s) {
    return static_cast<double>(next_u64(s) >> 11) * 0x1.0p-53;
}

} // namespace

Quon Quon::zero(const MtcData& m, int order) {
    Quon q;
    q.order = order;
    q.rank = m.rank();
    q.coeffs.assign(pow_size(q.rank, order), 0.0);
    return q;
}

Quon Quon::basis(const MtcData& m, std::vector<int> labels) {
    Quon q = zero(m, static_cast<int>(labels.size()));
    size_t idx = 0;
    for (int x : labels) {
        if (x < 0 || x >= q.rank) throw std::out_of_range("Quon::basis: bad label");
        idx = idx * q.rank + static_cast<size_t>(x);
    }
    q.coeffs[idx] = 1.0;
    return q;
}

bool LabelSubset::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

Quon multiply(const MtcData& m, const Quon& x, const Quon& y) {
    require_same(m, x, y);
    if (x.order != 1) throw std::invalid_argument("multiply: order-1 quons only");
    Quon out = Quon::zero(m, 1);
    for (int a = 0; a < m.rank(); ++a)
        out.coeffs[a] = x.coeffs[a] * y.coeffs[a] / m.d[a];
    return out;
}

Quon convolve(const MtcData& m, const Quon& x, const Quon& y) {
    require_same(m, x, y);
    if (x.order != 1) throw std::invalid_argument("convolve: order-1 quons only");
    Quon out = Quon::zero(m, 1);
    for (int a = 0; a < m.rank(); ++a) {
        if (x.coeffs[a] == 0.0) continue;
        for (int b = 0; b < m.rank(); ++b) {
            if (y.coeffs[b] == 0.0) continue;
            cplx xy = x.coeffs[a] * y.coeffs[b];
            for (int w = 0; w < m.rank(); ++w) {
                long long nn = m.ring.n(a, b, w);
                if (nn) out.coeffs[w] += xy * static_cast<double>(nn) / m.delta;
            }
        }
    }
    return out;
}

Quon sft(const MtcData& m, const Quon& x) {
    if (x.rank != m.rank()) throw std::invalid_argument("sft: rank mismatch");
    Quon out = x;
    for (int slot = 0; slot < x.order; ++slot) out = apply_slot_matrix(m.S, out, slot);
    return out;
}

Quon sft_inverse(const MtcData& m, const Quon& x) {
    if (x.rank != m.rank()) throw std::invalid_argument("sft_inverse: rank mismatch");
    int r = m.rank();
    std::vector<cplx> Sdag(static_cast<size_t>(r) * r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            Sdag[static_cast<size_t>(a) * r + b] = std::conj(m.s(b, a));
    Quon out = x;
    for (int slot = 0; slot < x.order; ++slot) out = apply_slot_matrix(Sdag, out, slot);
    return out;
}

double supp(const MtcData& m, const Quon& x, double tol) {
    if (x.order != 1) throw std::invalid_argument("supp: order-1 quons only");
    double acc = 0.0;
    for (int a = 0; a < m.rank(); ++a)
        if (std::abs(x.coeffs[a]) > tol) acc += m.d[a] * m.d[a];
    return acc;
}

Quon biprojection(const MtcData& m, const LabelSubset& K) {
    Quon q = Quon::zero(m, 1);
    for (int x : K.members) q.coeffs[x] = m.d[x];
    return q;
}

std::vector<LabelSubset> enumerate_fusion_subsets(const MtcData& m) {
    int r = m.rank();
    if (r > 20) throw std::invalid_argument("enumerate_fusion_subsets: |Irr| > 20");
    std::vector<LabelSubset> out;
    std::uint32_t total = 1u << r;
    for (std::uint32_t mask = 1; mask < total; mask += 2) { // must contain unit (bit 0)
        bool closed = true;
        for (int a = 0; a < r && closed; ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = 0; b < r && closed; ++b) {
                if (!(mask >> b & 1)) continue;
                for (int c = 0; c < r; ++c)
                    if (m.ring.n(a, b, c) > 0 && !(mask >> c & 1)) {
                        closed = false;
                        break;
                    }
            }
        }
        if (!closed) continue;
        LabelSubset K;
        for (int a = 0; a < r; ++a)
            if (mask >> a & 1) K.members.push_back(a);
        // fusion-closed sets containing the unit are closed under duals:
        // a in K and N_{a, abar}^1 = 1 force abar in K via N_{a,b}^1 > 0
        for (int a : K.members)
            if (!K.contains(m.dual(a))) { K.members.clear(); break; }
        if (!K.members.empty()) out.push_back(std::move(K));
    }
    return out;
}

LabelSubset mueger_center(const MtcData& m, const LabelSubset& K, double tol) {
    LabelSubset out;
    for (int x = 0; x < m.rank(); ++x) {
        bool central = true;
        for (int y : K.members) {
            cplx lhs = m.s(x, y) / m.s(x, 0);
            cplx rhs = m.s(0, y) / m.s(0, 0);
            if (std::abs(lhs - rhs) > tol) {
                central = false;
                break;
            }
        }
        if (central) out.members.push_back(x);
    }
    return out;
}

Quon random_quon(const MtcData& m, int order, std::uint64_t& state) {
    Quon q = Quon::zero(m, order);
    for (auto& c : q.coeffs)
        c = cplx(2.0 * next_unit(state) - 1.0, 2.0 * next_unit(state) - 1.0);
    return q;
}

VerificationReport check_fourier_duality(const MtcData& m, int trials, double tol,
                                         std::uint64_t seed) {
    VerificationReport rep;
    rep.name = "check_fourier_duality(" + m.name + ")";
    if (trials < 1) throw std::invalid_argument("check_fourier_duality: trials >= 1");

    auto residual = [&](const Quon& x, const Quon& y) {
        Quon lhs = sft(m, multiply(m, x, y));
        Quon rhs = convolve(m, sft(m, x), sft(m, y));
        double e = 0.0;
        for (size_t i = 0; i < lhs.coeffs.size(); ++i)
            e = std::max(e, std::abs(lhs.coeffs[i] - rhs.coeffs[i]));
        return e;
    };

    double basis_err = 0.0;
    for (int a = 0; a < m.rank(); ++a)
        for (int b = 0; b < m.rank(); ++b)
            basis_err = std::max(basis_err,
                                 residual(Quon::basis(m, {a}), Quon::basis(m, {b})));
    rep.add("fourier_duality_basis_sweep", basis_err <= tol, basis_err);

    std::uint64_t state = seed;
    double rand_err = 0.0;
    for (int t = 0; t < trials; ++t)
        rand_err = std::max(rand_err, residual(random_quon(m, 1, state),
                                               random_quon(m, 1, state)));
    rep.add("fourier_duality_random_pairs", rand_err <= tol, rand_err,
            "SAMPLED trials=" + std::to_string(trials) + " seed=" + std::to_string(seed));
    return rep;
}

VerificationReport check_biprojection_duality(const MtcData& m, double tol) {
    VerificationReport rep;
    rep.name = "check_biprojection_duality(" + m.name + ")";
    auto subsets = enumerate_fusion_subsets(m);
    for (const auto& K : subsets) {
        std::string tag = "K={";
        for (size_t i = 0; i < K.members.size(); ++i)
            tag += (i ? "," : "") + m.ring.names[K.members[i]];
        tag += "}";

        LabelSubset Khat = mueger_center(m, K, tol);
        Quon pk = biprojection(m, K);
        Quon fpk = sft(m, pk);
        Quon pkhat = biprojection(m, Khat);

        // (a) sft(P_K) is an entrywise nonnegative multiple of P_{Khat}
        double lambda = 0.0;
        for (int a = 0; a < m.rank(); ++a)
            if (Khat.contains(a)) {
                lambda = fpk.coeffs[a].real() / pkhat.coeffs[a].real();
                break;
            }
        double perr = 0.0;
        for (int a = 0; a < m.rank(); ++a)
            perr = std::max(perr, std::abs(fpk.coeffs[a] - lambda * pkhat.coeffs[a]));
        rep.add("sft_PK_proportional_to_center " + tag, lambda >= -tol && perr <= tol,
                perr);

        // (b) support duality
        double prod = supp(m, pk, 1e-7) * supp(m, pkhat, 1e-7);
        double serr = std::abs(prod - m.delta * m.delta);
        rep.add("supp_product_equals_delta_sq " + tag, serr <= tol, serr);

        // (c) double center returns K
        LabelSubset K2 = mueger_center(m, Khat, tol);
        rep.add("double_center_returns_K " + tag, K2 == K, K2 == K ? 0.0 : 1.0);

        // (d) sft^2 fixes P_K
        Quon f2 = sft(m, fpk);
        double qerr = 0.0;
        for (size_t i = 0; i < f2.coeffs.size(); ++i)
            qerr = std::max(qerr, std::abs(f2.coeffs[i] - pk.coeffs[i]));
        rep.add("sft_squared_fixes_PK " + tag, qerr <= tol, qerr);
    }
    return rep;
}

VerificationReport check_gannon_inequality(const MtcData& m, double tol) {
    VerificationReport rep;
    rep.name = "check_gannon_inequality(" + m.name + ")";
    double worst = 0.0;
    std::string equalities;
    for (int x = 0; x < m.rank(); ++x)
        for (int y = 0; y < m.rank(); ++y) {
            double lhs = std::abs(m.s(x, y)) / std::abs(m.s(x, 0));
            double rhs = m.s(0, y).real() / m.s(0, 0).real();
            double gap = lhs - rhs;
            worst = std::max(worst, gap);
            if (std::abs(gap) <= tol)
                equalities += "(" + m.ring.names[x] + "," + m.ring.names[y] + ")";
        }
    rep.add("gannon_inequality", worst <= tol, std::max(worst, 0.0), equalities);
    return rep;
}

} // namespace quon
