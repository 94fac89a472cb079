#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "quon/mtc.hpp"

using namespace quon;

TEST_CASE("built-in categories pass the axiom suite") {
    std::vector<MtcData> cats = {fibonacci(), ising()};
    for (int n = 2; n <= 6; ++n) cats.push_back(pointed_z(n));
    for (int k = 1; k <= 8; ++k) cats.push_back(su2_level(k));
    for (const auto& m : cats) {
        auto rep = verify_modular_data(m, 1e-9);
        INFO(rep.name);
        for (const auto& c : rep.checks) {
            INFO(c.id << " err=" << c.max_error);
            CHECK(c.pass);
        }
        CHECK(rep.passed());
    }
}

TEST_CASE("fibonacci data") {
    auto m = fibonacci();
    CHECK(m.rank() == 2);
    CHECK(m.d[1] == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(m.mu == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("ising data") {
    auto m = ising();
    CHECK(m.rank() == 3);
    CHECK(m.delta == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m.d[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("semion and su2 level 1 share the qubit S matrix") {
    auto z2 = pointed_z(2);
    double v = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(z2.s(0, 0) - cplx(v)) < 1e-12);
    CHECK(std::abs(z2.s(0, 1) - cplx(v)) < 1e-12);
    CHECK(std::abs(z2.s(1, 1) - cplx(-v)) < 1e-12);
    auto su = su2_level(1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(std::abs(su.s(a, b) - z2.s(a, b)) < 1e-12);
}

TEST_CASE("corrupted S matrix fails verification") {
    auto m = ising();
    m.S[1 * 3 + 1] = 0.1; // S_sigma^sigma
    auto rep = verify_modular_data(m, 1e-9);
    CHECK_FALSE(rep.passed());
    bool unitary_failed = false, verlinde_failed = false;
    for (const auto& c : rep.checks) {
        if (c.id == "S_unitary" && !c.pass) unitary_failed = true;
        if (c.id == "verlinde_reconstruction" && !c.pass) verlinde_failed = true;
    }
    CHECK(unitary_failed);
    CHECK(verlinde_failed);
}

TEST_CASE("fusion_dim_hom_unit examples") {
    auto fib = fibonacci();
    auto is = ising();
    CHECK(fusion_dim_hom_unit(fib, std::vector<int>{}) == 1);
    CHECK(fusion_dim_hom_unit(fib, std::vector<int>{1, 1, 1}) == 1);
    CHECK(fusion_dim_hom_unit(is, std::vector<int>{1, 1, 1}) == 0);
    CHECK(fusion_dim_hom_unit(is, std::vector<int>{1, 1}) == 1);
    CHECK(fusion_dim_hom_unit(is, std::vector<int>{1, 1, 2, 1, 1}) == 2);
}

TEST_CASE("fusion_dim_hom_unit word symmetries") {
    std::mt19937 rng(20260823);
    std::vector<MtcData> cats = {fibonacci(), ising(), pointed_z(5), su2_level(4)};
    for (const auto& m : cats) {
        std::uniform_int_distribution<int> lab(0, m.rank() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            int len = 1 + static_cast<int>(rng() % 6);
            std::vector<int> w(len);
            for (int& x : w) x = lab(rng);
            long long base = fusion_dim_hom_unit(m, w);
            // cyclic rotation
            std::vector<int> rot(w.begin() + 1, w.end());
            rot.push_back(w[0]);
            CHECK(fusion_dim_hom_unit(m, rot) == base);
            // reverse and dualize
            std::vector<int> rev(w.rbegin(), w.rend());
            for (int& x : rev) x = m.dual(x);
            CHECK(fusion_dim_hom_unit(m, rev) == base);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(pointed_z(1));
    CHECK_THROWS(su2_level(0));
    CHECK_THROWS(su2_level(17));
    MtcData out;
    CHECK(builtin_category("fibonacci", out));
    CHECK(builtin_category("z4", out));
    CHECK(out.rank() == 4);
    CHECK(builtin_category("su2_3", out));
    CHECK(out.rank() == 4);
    CHECK_FALSE(builtin_category("nonsense", out));
    CHECK_FALSE(builtin_category("z1", out));
}
