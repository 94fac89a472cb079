#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quon/quon_algebra.hpp"

using namespace quon;

namespace {

double linf(const Quon& a, const Quon& b) {
    double e = 0.0;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        e = std::max(e, std::abs(a.coeffs[i] - b.coeffs[i]));
    return e;
}

} // namespace

TEST_CASE("multiplication on basis quons") {
    auto fib = fibonacci();
    auto e0 = Quon::basis(fib, {0}), e1 = Quon::basis(fib, {1});
    auto p = multiply(fib, e0, e0);
    CHECK(std::abs(p.coeffs[0] - 1.0) < 1e-12);
    auto q = multiply(fib, e0, e1);
    CHECK(std::abs(q.coeffs[0]) < 1e-12);
    CHECK(std::abs(q.coeffs[1]) < 1e-12);
    auto t = multiply(fib, e1, e1);
    double phi_inv = 2.0 / (1.0 + std::sqrt(5.0));
    CHECK(std::abs(t.coeffs[1] - phi_inv) < 1e-12);
}

TEST_CASE("convolution on basis quons") {
    auto fib = fibonacci();
    auto e0 = Quon::basis(fib, {0}), e1 = Quon::basis(fib, {1});
    auto c = convolve(fib, e0, e1);
    CHECK(std::abs(c.coeffs[1] - 1.0 / fib.delta) < 1e-12);
    auto t = convolve(fib, e1, e1);
    CHECK(std::abs(t.coeffs[0] - 1.0 / fib.delta) < 1e-12);
    CHECK(std::abs(t.coeffs[1] - 1.0 / fib.delta) < 1e-12);

    auto is = ising();
    auto s = convolve(is, Quon::basis(is, {1}), Quon::basis(is, {1}));
    CHECK(std::abs(s.coeffs[0] - 0.5) < 1e-12);
    CHECK(std::abs(s.coeffs[1]) < 1e-12);
    CHECK(std::abs(s.coeffs[2] - 0.5) < 1e-12);
}

TEST_CASE("sft basics") {
    auto z2 = pointed_z(2);
    auto f = sft(z2, Quon::basis(z2, {0}));
    double v = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f.coeffs[0] - v) < 1e-12);
    CHECK(std::abs(f.coeffs[1] - v) < 1e-12);

    // sft^2 = charge conjugation, sft^4 = identity, sft_inverse undoes sft
    for (const auto& m : {fibonacci(), ising(), pointed_z(5)}) {
        std::uint64_t st = 7;
        auto x = random_quon(m, 2, st);
        auto y = sft(m, sft(m, sft(m, sft(m, x))));
        CHECK(linf(x, y) < 1e-9);
        CHECK(linf(sft_inverse(m, sft(m, x)), x) < 1e-12);
        for (int a = 0; a < m.rank(); ++a) {
            auto cc = sft(m, sft(m, Quon::basis(m, {a})));
            CHECK(linf(cc, Quon::basis(m, {m.dual(a)})) < 1e-12);
        }
    }
}

TEST_CASE("sft is unitary on random pairs") {
    for (const auto& m : {fibonacci(), pointed_z(3), su2_level(3)}) {
        std::uint64_t st = 99;
        for (int t = 0; t < 20; ++t) {
            auto x = random_quon(m, 1, st);
            auto y = random_quon(m, 1, st);
            cplx ip1 = 0.0, ip2 = 0.0;
            auto fx = sft(m, x), fy = sft(m, y);
            for (size_t i = 0; i < x.coeffs.size(); ++i) {
                ip1 += std::conj(x.coeffs[i]) * y.coeffs[i];
                ip2 += std::conj(fx.coeffs[i]) * fy.coeffs[i];
            }
            CHECK(std::abs(ip1 - ip2) < 1e-9);
        }
    }
}

TEST_CASE("fourier duality reports pass") {
    for (const auto& m : {fibonacci(), ising(), pointed_z(4), su2_level(2)}) {
        auto rep = check_fourier_duality(m, 100, 1e-10);
        INFO(rep.name << " err=" << rep.max_error());
        CHECK(rep.passed());
    }
}

TEST_CASE("both products are associative and commutative, with units") {
    for (const auto& m : {fibonacci(), ising(), su2_level(2)}) {
        std::uint64_t st = 3;
        auto x = random_quon(m, 1, st), y = random_quon(m, 1, st),
             z = random_quon(m, 1, st);
        CHECK(linf(multiply(m, x, y), multiply(m, y, x)) < 1e-12);
        CHECK(linf(convolve(m, x, y), convolve(m, y, x)) < 1e-12);
        CHECK(linf(multiply(m, multiply(m, x, y), z),
                   multiply(m, x, multiply(m, y, z))) < 1e-12);
        CHECK(linf(convolve(m, convolve(m, x, y), z),
                   convolve(m, x, convolve(m, y, z))) < 1e-10);

        // multiply-unit is P_Irr = sum d(X)|X>; its inverse Fourier transform
        // is the convolve-unit delta|1>
        LabelSubset all;
        for (int a = 0; a < m.rank(); ++a) all.members.push_back(a);
        auto mu = biprojection(m, all);
        CHECK(linf(multiply(m, mu, x), x) < 1e-12);
        auto cu = sft_inverse(m, mu);
        for (int a = 0; a < m.rank(); ++a) {
            auto e = Quon::basis(m, {a});
            CHECK(linf(convolve(m, cu, e), e) < 1e-10);
        }
        // and numerically cu = delta |1>
        CHECK(std::abs(cu.coeffs[0] - m.delta) < 1e-10);
    }
}

TEST_CASE("supp") {
    auto is = ising();
    CHECK(supp(is, Quon::zero(is, 1)) == 0.0);
    LabelSubset K{{0, 2}};
    CHECK(supp(is, biprojection(is, K)) == doctest::Approx(2.0));
    auto fib = fibonacci();
    LabelSubset all{{0, 1}};
    CHECK(supp(fib, biprojection(fib, all)) == doctest::Approx(fib.mu));
}

TEST_CASE("fusion subset enumeration") {
    auto fib = fibonacci();
    auto subs = enumerate_fusion_subsets(fib);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].members == std::vector<int>{0});
    CHECK(subs[1].members == std::vector<int>{0, 1});

    auto is = ising();
    auto isubs = enumerate_fusion_subsets(is);
    REQUIRE(isubs.size() == 3);
    CHECK(isubs[0].members == std::vector<int>{0});
    CHECK(isubs[1].members == std::vector<int>{0, 2});
    CHECK(isubs[2].members == std::vector<int>{0, 1, 2});

    // subsets of Z4 are the subgroups {0}, {0,2}, Z4
    auto z4 = pointed_z(4);
    auto zsubs = enumerate_fusion_subsets(z4);
    REQUIRE(zsubs.size() == 3);
    CHECK(zsubs[0].members == std::vector<int>{0});
    CHECK(zsubs[1].members == std::vector<int>{0, 2});
    CHECK(zsubs[2].members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("mueger centers") {
    auto is = ising();
    LabelSubset unit{{0}};
    CHECK(mueger_center(is, unit, 1e-7).members == std::vector<int>{0, 1, 2});
    LabelSubset k1{{0, 2}};
    CHECK(mueger_center(is, k1, 1e-7).members == std::vector<int>{0, 2});
    auto fib = fibonacci();
    LabelSubset kf{{0, 1}};
    CHECK(mueger_center(fib, kf, 1e-7).members == std::vector<int>{0});
}

TEST_CASE("biprojection duality and Gannon inequality") {
    std::vector<MtcData> cats = {fibonacci(), ising()};
    for (int n = 2; n <= 5; ++n) cats.push_back(pointed_z(n));
    for (int k = 1; k <= 6; ++k) cats.push_back(su2_level(k));
    for (const auto& m : cats) {
        auto rep = check_biprojection_duality(m, 1e-7);
        INFO(rep.name);
        for (const auto& c : rep.checks) {
            INFO(c.id << " err=" << c.max_error);
            CHECK(c.pass);
        }
        auto grep = check_gannon_inequality(m, 1e-7);
        CHECK(grep.passed());
    }
}

TEST_CASE("sft of biprojections is entrywise nonnegative") {
    for (const auto& m : {fibonacci(), ising(), pointed_z(6), su2_level(4)}) {
        for (const auto& K : enumerate_fusion_subsets(m)) {
            auto f = sft(m, biprojection(m, K));
            for (const auto& c : f.coeffs) {
                CHECK(c.real() >= -1e-9);
                CHECK(std::abs(c.imag()) < 1e-9);
            }
        }
    }
}

TEST_CASE("gannon equality pairs include the unit column and central pairs") {
    auto is = ising();
    // X=psi, Y=psi: |S| ratio hits the bound
    double lhs = std::abs(is.s(2, 2)) / std::abs(is.s(2, 0));
    double rhs = is.s(0, 2).real() / is.s(0, 0).real();
    CHECK(lhs == doctest::Approx(rhs));
}
