#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "quon/report.hpp"

namespace quon {

using cplx = std::complex<double>;

struct Label {
    int index = 0;
    std::string name;
};

// Fusion ring: N[(x*r+y)*r+z] = N_{x,y}^z, dual an involution, unit = index 0.
struct FusionRing {
    std::vector<std::string> names;
    std::vector<int> dual;
    std::vector<long long> N;

    int rank() const { return static_cast<int>(names.size()); }
    long long n(int x, int y, int z) const {
        return N[(static_cast<size_t>(x) * rank() + y) * rank() + z];
    }
    long long& n(int x, int y, int z) {
        return N[(static_cast<size_t>(x) * rank() + y) * rank() + z];
    }
};

struct MtcData {
    std::string name;
    FusionRing ring;
    std::vector<cplx> S; // row-major, S[x*rank+y] = S_x^y
    std::vector<double> d;
    double mu = 0.0;
    double delta = 0.0;

    int rank() const { return ring.rank(); }
    cplx s(int x, int y) const { return S[static_cast<size_t>(x) * rank() + y]; }
    int dual(int x) const { return ring.dual[x]; }
    bool multiplicity_free() const;
};

MtcData fibonacci();
MtcData ising();
MtcData pointed_z(int n);   // Z_n pointed category from a nondegenerate quadratic form
MtcData su2_level(int k);   // labels are twice-spin 0..k, k <= 16

// Resolves names like "fibonacci", "ising", "semion", "z5", "su2_3".
// Returns false if the name is not recognized.
bool builtin_category(const std::string& name, MtcData& out);
std::vector<std::string> builtin_category_names();

VerificationReport verify_modular_data(const MtcData& m, double tol);

// dim hom(1, X_1 x ... x X_k) by iterated integer products of fusion matrices.
long long fusion_dim_hom_unit(const MtcData& m, std::span<const int> word);

} // namespace quon
