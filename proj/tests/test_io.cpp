#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "quon/mtc_io.hpp"
#include "quon/recoupling.hpp"

using namespace quon;

namespace {

const char* kSemionFile =
    "# rank-2 pointed category\n"
    "mtc handwritten_semion\n"
    "labels e s\n"
    "unit e\n"
    "N e e e 1\n"
    "N e s s 1\n"
    "N s e s 1\n"
    "N s s e 1\n"
    "S 0 0.70710678118654752 0 0.70710678118654752 0\n"
    "S 1 0.70710678118654752 0 -0.70710678118654752 0\n";

} // namespace

TEST_CASE("round trip: parse, serialize, parse") {
    MtcFile f, g;
    ParseError err;
    REQUIRE_MESSAGE(parse_mtc(kSemionFile, f, err), err.str());
    std::string s = serialize_mtc(f);
    REQUIRE_MESSAGE(parse_mtc(s, g, err), err.str());
    CHECK(f == g);
    CHECK(serialize_mtc(g) == s);
}

TEST_CASE("round trip through MtcData for the built-ins") {
    for (const auto& m : {fibonacci(), ising(), pointed_z(4), su2_level(3)}) {
        auto f = to_mtc_file(m);
        MtcFile g;
        ParseError perr;
        REQUIRE_MESSAGE(parse_mtc(serialize_mtc(f), g, perr), perr.str());
        CHECK(f == g);
        MtcData back;
        std::string err;
        REQUIRE_MESSAGE(to_mtc_data(g, back, err), err);
        CHECK(back.rank() == m.rank());
        CHECK(back.ring.N == m.ring.N);
        CHECK(back.ring.dual == m.ring.dual);
        for (size_t i = 0; i < m.S.size(); ++i)
            CHECK(std::abs(back.S[i] - m.S[i]) < 1e-12);
        CHECK(std::abs(back.delta - m.delta) < 1e-12);
    }
}

TEST_CASE("hand-written file passes the axiom suite") {
    MtcFile f;
    ParseError perr;
    REQUIRE(parse_mtc(kSemionFile, f, perr));
    MtcData m;
    std::string err;
    REQUIRE_MESSAGE(to_mtc_data(f, m, err), err);
    auto rep = verify_modular_data(m, 1e-9);
    for (const auto& c : rep.checks) {
        INFO(c.id << " err=" << c.max_error);
        CHECK(c.pass);
    }
}

TEST_CASE("positioned parse errors") {
    MtcFile f;
    ParseError err;

    CHECK_FALSE(parse_mtc("mtc x\nN tau tau one 1\nlabels one tau\nunit one\n", f, err));
    CHECK(err.line == 2); // N before labels cannot resolve names

    CHECK_FALSE(parse_mtc("labels a b\nunit a\n", f, err)); // missing mtc line
    CHECK(err.line >= 1);

    CHECK_FALSE(parse_mtc("mtc x\nlabels a b\nunit b\n", f, err)); // unit not first
    CHECK(err.line == 3);

    CHECK_FALSE(parse_mtc("mtc x\nlabels a a\nunit a\n", f, err)); // duplicate label
    CHECK(err.line == 2);

    CHECK_FALSE(parse_mtc("mtc x\nlabels a b\nunit a\nN a b q 1\n", f, err));
    CHECK(err.line == 4); // unknown label
    CHECK(err.column > 1);

    CHECK_FALSE(parse_mtc("mtc x\nlabels a b\nunit a\nS 0 1 0\n", f, err));
    CHECK(err.line == 4); // wrong S row arity

    CHECK_FALSE(parse_mtc("mtc x\nlabels a b\nunit a\nbogus 1\n", f, err));
    CHECK(err.line == 4);
}

TEST_CASE("S omitted requires a built-in name") {
    const char* text =
        "mtc fibonacci\n"
        "labels 1 tau\n"
        "unit 1\n"
        "N 1 1 1 1\n";
    MtcFile f;
    ParseError perr;
    REQUIRE(parse_mtc(text, f, perr));
    MtcData m;
    std::string err;
    CHECK(to_mtc_data(f, m, err));
    CHECK(m.rank() == 2);

    f.name = "no_such_builtin";
    CHECK_FALSE(to_mtc_data(f, m, err));
    CHECK_FALSE(err.empty());
}

TEST_CASE("fingerprints are stable and distinguish categories") {
    auto f1 = fingerprint(fibonacci());
    CHECK(f1.size() == 16);
    CHECK(f1 == fingerprint(fibonacci()));
    CHECK(f1 != fingerprint(ising()));
    // fingerprint survives a serialization round trip
    MtcFile f;
    ParseError perr;
    REQUIRE(parse_mtc(serialize_mtc(to_mtc_file(fibonacci())), f, perr));
    CHECK(fingerprint(f) == f1);
}

TEST_CASE("dense F table expansion") {
    MtcFile f = to_mtc_file(fibonacci());
    auto r = build_recoupling(fibonacci());
    for (size_t i = 0; i < r.F.size(); ++i) {
        size_t rem = i;
        std::array<int, 6> k{};
        for (int j = 5; j >= 0; --j) {
            k[j] = static_cast<int>(rem % 2);
            rem /= 2;
        }
        if (r.F[i] != cplx(0.0)) f.F[k] = r.F[i];
    }
    auto dense = dense_f_table(f);
    REQUIRE(dense.size() == r.F.size());
    for (size_t i = 0; i < dense.size(); ++i) CHECK(std::abs(dense[i] - r.F[i]) < 1e-15);
}

TEST_CASE("load_category resolves built-ins and files") {
    MtcData m;
    std::string err;
    CHECK(load_category("su2_2", m, err));
    CHECK(m.rank() == 3);

    std::string path = "test_io_semion.mtc";
    {
        std::ofstream out(path);
        out << kSemionFile;
    }
    MtcFile file;
    CHECK_MESSAGE(load_category(path, m, err, &file), err);
    CHECK(m.rank() == 2);
    CHECK(file.name == "handwritten_semion");
    std::remove(path.c_str());

    CHECK_FALSE(load_category("definitely_missing.mtc", m, err));
    CHECK_FALSE(err.empty());
}
