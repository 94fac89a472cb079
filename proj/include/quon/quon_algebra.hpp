#pragma once

#include <cstdint>
#include <vector>

#include "quon/mtc.hpp"
#include "quon/report.hpp"

namespace quon {

// Order-n quon in quantum coordinates: coeffs[idx] is the coefficient of
// |X_1 ... X_n> with idx = ((X_1*r + X_2)*r + ...)*r + X_n.
struct Quon {
    int order = 0;
    int rank = 0;
    std::vector<cplx> coeffs;

    static Quon zero(const MtcData& m, int order);
    static Quon basis(const MtcData& m, std::vector<int> labels);
    size_t size() const { return coeffs.size(); }
};

struct LabelSubset {
    std::vector<int> members; // sorted label indices

    bool contains(int x) const;
    bool operator==(const LabelSubset& o) const { return members == o.members; }
};

Quon multiply(const MtcData& m, const Quon& x, const Quon& y);
Quon convolve(const MtcData& m, const Quon& x, const Quon& y);
Quon sft(const MtcData& m, const Quon& x);
Quon sft_inverse(const MtcData& m, const Quon& x);

double supp(const MtcData& m, const Quon& x, double tol = 1e-7);

// P_K = sum_{X in K} d(X)|X> (the characteristic projection in quantum coordinates).
Quon biprojection(const MtcData& m, const LabelSubset& K);

// All subsets of Irr containing the unit and closed under fusion; each is
// automatically closed under duals.
std::vector<LabelSubset> enumerate_fusion_subsets(const MtcData& m);

LabelSubset mueger_center(const MtcData& m, const LabelSubset& K, double tol);

Quon random_quon(const MtcData& m, int order, std::uint64_t& state);

VerificationReport check_fourier_duality(const MtcData& m, int trials, double tol,
                                         std::uint64_t seed = 0x51CE5EEDULL);
VerificationReport check_biprojection_duality(const MtcData& m, double tol);
VerificationReport check_gannon_inequality(const MtcData& m, double tol);

} // namespace quon
