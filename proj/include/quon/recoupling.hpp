#pragma once

#include <array>
#include <vector>

#include "quon/mtc.hpp"
#include "quon/report.hpp"

namespace quon {

// Multiplicity-free recoupling data in the unitary gauge: unit-strand F blocks
// are exactly identity and every F block is unitary. F[a,b,c,d][e][f] is the
// change of basis between the two fusion trees of hom(1, a x b x c x dbar)
// with unit-normalized trivalent vertices.
struct RecouplingData {
    MtcData category;
    std::vector<cplx> F;       // rank^6, index ((((a*r+b)*r+c)*r+d)*r+e)*r+f
    std::vector<double> theta; // rank^3 positive theta symbols (0 if inadmissible)

    int rank() const { return category.rank(); }
    bool admissible(int a, int b, int c) const {
        return category.ring.n(a, b, category.dual(c)) == 1;
    }
    cplx f(int a, int b, int c, int d, int e, int f_) const {
        int r = rank();
        return F[(((((static_cast<size_t>(a) * r + b) * r + c) * r + d) * r + e) * r + f_)];
    }
    double th(int a, int b, int c) const {
        int r = rank();
        return theta[(static_cast<size_t>(a) * r + b) * r + c];
    }
};

// Builds recoupling data for fibonacci(), ising() or su2_level(k); Fibonacci
// and Ising are realized inside the SU(2) recoupling at levels 3 and 2.
RecouplingData build_recoupling(const MtcData& m);

// Builds from a user-supplied full F table (rank^6 entries); validates
// multiplicity-freeness, unitarity, unit blocks and the pentagon identity.
RecouplingData build_recoupling_from_table(const MtcData& m, std::vector<cplx> F,
                                           double tol = 1e-9);

VerificationReport validate_recoupling(const RecouplingData& r, double tol);

// Squared evaluation of the tetrahedral network with unit-normalized trivalent
// vertices. Edge numbering: 1..3 rim triangle counterclockwise, 4..6 spokes
// ordered by angle; vertex triples {1,3,4},{1,2,5},{2,3,6},{4,5,6}.
double normalized_tet_squared(const RecouplingData& r, const std::array<int, 6>& labels);

// Kauffman-Lins closed forms at q = exp(pi i/(k+2)), labels twice-spin.
double kl_qint(int k, int n);
double kl_theta(int k, int a, int b, int c);            // signed KL theta
double kl_tet(int k, const std::array<int, 6>& labels); // Tet[a b e; c d f] in KL order

} // namespace quon
