#pragma once

#include <span>
#include <vector>

#include "quon/mtc.hpp"
#include "quon/planar_graph.hpp"
#include "quon/quon_algebra.hpp"
#include "quon/recoupling.hpp"
#include "quon/report.hpp"

namespace quon {

// Proper rational function as partial fractions with simple poles:
// f(z) = sum_i num_i/(pole_i - z).
struct RationalFn {
    struct Term {
        double pole;
        cplx num;
    };
    std::vector<Term> terms;

    void add_term(double pole, cplx num, double merge_tol = 1e-9);
    cplx series_coeff(int g) const; // coefficient of z^g
};

struct GenusDimTable {
    int n = 0;
    int gmax = 0;
    int rank = 0;
    std::vector<long long> values; // index: xvec_index * (gmax+1) + g

    long long at(size_t xvec_index, int g) const {
        return values[xvec_index * (gmax + 1) + g];
    }
};

Quon ghz(const MtcData& m, int n, int g);
Quon max_state(const MtcData& m, int n, int g);

// dim(X,g) = sum over Y in Irr^g of dim hom(1, X (x) Y (x) theta(Y)), with
// theta reversing and dualizing Y; exact integer oracle.
long long brute_force_dim(const MtcData& m, std::span<const int> xvec, int g);
GenusDimTable genus_dim_table(const MtcData& m, int n, int gmax);

VerificationReport check_max_equals_s_ghz(const MtcData& m, int n, int g, double tol);

std::vector<RationalFn> ghz_genfun(const MtcData& m, int n);
std::vector<RationalFn> max_genfun(const MtcData& m, int n);

// <X|T_G> = (prod over vertices of delta^(1-k/2)) * sum_alpha |Z(G;X,alpha)|^2,
// evaluated by reducing the closed trivalent network (unit smoothing, loop,
// bubble and triangle moves). labels[j] labels edge j. comb shifts the fusion
// tree decomposition of >=4-valent vertices (any value gives the same result;
// exposed for basis-independence tests).
double graph_coefficient(const MtcData& m, const RecouplingData& r,
                         const PlanarGraph& g, std::span<const int> labels,
                         int comb = 0);

// all label tuples in row-major order (edge 0 most significant)
std::vector<double> graph_coefficient_table(const MtcData& m, const RecouplingData& r,
                                            const PlanarGraph& g, int comb = 0);

// coefficient vector of dual_graph(G) must equal S tensor n applied to the
// coefficient vector of G
VerificationReport check_graph_duality(const MtcData& m, const RecouplingData& r,
                                       const PlanarGraph& g, double tol);

} // namespace quon
