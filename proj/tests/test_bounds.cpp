#include "schwarz/bounds.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace schwarz;
using Catch::Matchers::WithinAbs;

namespace {
const auto kId = FunctionSpec::polynomial({0.0, 1.0});
const auto kZ2 = FunctionSpec::polynomial({0.0, 0.0, 1.0});
const auto kMoebius = FunctionSpec::moebius(0.0, 0.5, 1.0);

FunctionSpec schur_extremal() {
    // z (z + 1/2) / (1 + z / 2) = z/2 + (3/4) sum_{k>=1} (-1/2)^{k-1} z^{k+1}
    std::vector<cplx> c(60, 0.0);
    c[1] = 0.5;
    for (int k = 1; k + 1 < 60; ++k) c[k + 1] = 0.75 * std::pow(-0.5, k - 1);
    return FunctionSpec::series(c);
}
} // namespace

TEST_CASE("reports: pass, fail and equality are all representable", "[bounds]") {
    const auto eq = make_report(Inequality::Don, 1.0, 1.0, 1e-6, 0.0);
    CHECK(eq.pass);
    CHECK(eq.equality);
    const auto strict = make_report(Inequality::Don, 0.5, 1.0, 1e-6, 0.0);
    CHECK(strict.pass);
    CHECK_FALSE(strict.equality);
    CHECK(strict.slack == 0.5);
    const auto fail = make_report(Inequality::Don, 1.1, 1.0, 1e-6, 0.0);
    CHECK_FALSE(fail.pass);
    CHECK(fail.slack < 0);
    const auto ge = make_report_ge(Inequality::DensityLowerBound, 2.0, 1.0, 1e-6, 0.0);
    CHECK(ge.pass);
    CHECK(ge.lhs == 2.0);
    CHECK(ge.slack == 1.0);
    CHECK(ge.relation == ">=");
    const auto j = nlohmann::json::parse(to_json_line(fail));
    CHECK(j["name"] == "Don");
    CHECK(j["pass"] == false);
    CHECK(j["slack"].get<double>() == fail.slack);
}

TEST_CASE("check_growth: catalog examples", "[bounds]") {
    const auto r1 = check_growth(kId, 0.3, Functional::Rad);
    CHECK_THAT(r1.lhs, WithinAbs(0.3, 1e-15));
    CHECK(r1.equality);
    const auto r2 = check_growth(kMoebius, 0.5, Functional::Diam);
    CHECK(r2.pass);
    CHECK(r2.lhs < 1.0 - 1e-3);
    FunctionalOptions o;
    const auto r3 = check_growth(kZ2, 0.5, Functional::Area, 1e-6, o);
    CHECK_THAT(r3.lhs, WithinAbs(kPi / 16, 1e-4));
    CHECK_THAT(r3.rhs, WithinAbs(kPi / 4, 1e-15));
    CHECK(r3.slack > 0);
    CHECK_THROWS_AS(check_growth(FunctionSpec::polynomial({0.0, 3.0}), 0.5, Functional::Rad), NormalizationError);
}

TEST_CASE("normalize rescales to the disk value", "[bounds]") {
    const auto f = FunctionSpec::polynomial({1.0, 3.0, 0.5});
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::Area}) {
        const auto g = normalize(f, kind);
        CHECK_THAT(unit_disk_value(g, kind).value, WithinAbs(disk_value(kind, 4), 1e-9));
        CHECK(check_growth(g, 0.5, kind).pass);
    }
}

TEST_CASE("check_don: catalog examples", "[bounds]") {
    const auto r = check_don(kMoebius, 0.8);
    CHECK_THAT(r.lhs, WithinAbs(1.0, 1e-15));
    CHECK_THAT(r.rhs, WithinAbs(1.0, 1e-15));
    CHECK(r.equality);
    const auto s = check_don(kId, 0.5);
    CHECK_THAT(s.rhs, WithinAbs(1.0 / (1.0 + std::sqrt(0.75)), 1e-15));
    CHECK(s.pass);
    CHECK_FALSE(s.equality);
    const auto z = check_don(FunctionSpec::polynomial({0.0, 0.5, 0.3}), 0.0);
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 0.0);
    CHECK_THROWS_AS(check_don(FunctionSpec::polynomial({0.0, 2.0}), 0.5), NormalizationError);
}

TEST_CASE("check_don_symmetric: catalog examples", "[bounds]") {
    const auto a = check_don_symmetric(kMoebius, 0.6, 0.0);
    const auto b = check_don(kMoebius, 0.6);
    CHECK_THAT(a.rhs, WithinAbs(b.rhs, 1e-12));
    CHECK_THAT(a.lhs, WithinAbs(b.lhs, 1e-15));
    const auto same = check_don_symmetric(kMoebius, cplx(0.2, 0.3), cplx(0.2, 0.3));
    CHECK(same.lhs == 0.0);
    CHECK(same.rhs == 0.0);
    const auto e = check_don_symmetric(kMoebius, 0.8, 0.0);
    CHECK(e.equality);
    CHECK(e.context["forms_agree"] == true);
}

TEST_CASE("Don equality fires only on the extremal locus", "[bounds][property]") {
    for (double b : {0.2, 0.5, 0.7}) {
        const auto m = FunctionSpec::moebius(0.0, b, 1.0);
        const double locus = 2 * b / (1 + b * b);
        CHECK(check_don(m, locus).equality);
        int equalities = 0;
        for (int i = 1; i <= 50; ++i)
            for (int k = 0; k < 16; ++k) {
                const cplx z = std::polar(i / 51.0, 2 * kPi * k / 16);
                const auto rep = check_don(m, z);
                CHECK(rep.pass);
                equalities += rep.equality;
            }
        CHECK(equalities == 0);
    }
}

TEST_CASE("check_poukka: catalog examples", "[bounds]") {
    const auto r = check_poukka(FunctionSpec::polynomial({0.0, 0.0, 0.0, 0.0, 0.0, 1.0}), 5);
    CHECK_THAT(r.lhs, WithinAbs(1.0, 1e-15));
    CHECK(r.equality);
    const auto s = check_poukka(kZ2, 1);
    CHECK(s.lhs == 0.0);
    CHECK(s.pass);
    const auto t = check_poukka(FunctionSpec::polynomial({0.0, 1.0, 0.3}), 2);
    CHECK_THAT(t.lhs, WithinAbs(0.3, 1e-15));
    CHECK(t.rhs >= 1.0);
    CHECK_FALSE(t.equality);
    CHECK_THROWS_AS(check_poukka(kZ2, 0), DomainError);
}

TEST_CASE("Poukka equality exactly for rotated monomials", "[bounds][property]") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<cplx> c(n + 1, 0.0);
        c[0] = cplx(0.3, -0.2);
        c[n] = std::polar(1.0, 0.3 * n);
        CHECK(check_poukka(FunctionSpec::polynomial(c), n).equality);
    }
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 5);
        for (int n = 1; n <= 5; ++n) {
            const auto rep = check_poukka(f, n);
            CHECK(rep.pass);
            CHECK_FALSE(rep.equality);
        }
    }
}

TEST_CASE("check_schur: catalog examples", "[bounds]") {
    const auto r = check_schur(kZ2, 0.5);
    CHECK_THAT(r.lhs, WithinAbs(0.25, 1e-15));
    CHECK_THAT(r.rhs, WithinAbs(0.25, 1e-15));
    CHECK(r.equality);
    const auto s = check_schur(kId, 0.7);
    CHECK(s.lhs == 0.0);
    CHECK(s.rhs == 0.0);
    const auto e = check_schur(schur_extremal(), 0.6);
    CHECK_THAT(e.rhs, WithinAbs(0.75 * 0.36 / 0.7, 1e-15));
    CHECK(e.equality);
    CHECK_THROWS_AS(check_schur(FunctionSpec::polynomial({0.0, 1.0, 0.5}), 0.5), NormalizationError);
}

TEST_CASE("check_isoperimetric: catalog examples", "[bounds]") {
    const double r = 0.7;
    CHECK(check_isoperimetric(kPi * r * r, 2 * kPi * r).equality);
    const auto f = FunctionSpec::polynomial({0.0, 1.0, 0.2});
    const auto a = area(f, 0.8);
    const auto len = perimeter_univalent(f, 0.8);
    const auto rep = check_isoperimetric(a.value, len.value, 1e-6, a.abs_error, len.abs_error);
    CHECK(rep.pass);
    CHECK_FALSE(rep.equality);
    CHECK(check_isoperimetric(0.0, 1.0).pass);
    CHECK_THROWS_AS(check_isoperimetric(-1.0, 1.0), DomainError);
}

TEST_CASE("check_polya_chain: catalog examples", "[bounds]") {
    for (const auto& rep : check_polya_chain(kId, 0.5, 4)) {
        CHECK(rep.pass);
        CHECK(rep.equality);
    }
    for (const auto& rep : check_polya_chain(kZ2, 0.5, 4)) {
        CHECK(rep.pass);
        CHECK(std::abs(rep.slack) <= 1e-4 * rep.rhs);
    }
    for (const auto& rep : check_polya_chain(FunctionSpec::polynomial({0.0, 1.0, 0.2}), 0.8, 4)) {
        CHECK(rep.pass);
        CHECK_FALSE(rep.equality);
    }
}

TEST_CASE("every checker passes on random polynomials", "[bounds][property]") {
    std::mt19937_64 rng(53);
    FunctionalOptions o;
    o.m = 2048;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 1 + trial % 5);
        if (f.is_linear()) continue;
        const auto fr = normalize(f, Functional::Rad, o);
        const auto fd = normalize(f, Functional::Diam, o);
        const auto fa = normalize(f, Functional::Area, o);
        for (int n = 1; n <= 5; ++n) CHECK(check_poukka(f, n, 1e-6, o).pass);
        for (double r : {0.25, 0.5, 0.75}) {
            INFO("trial " << trial << " r " << r);
            CHECK(check_growth(fr, r, Functional::Rad, 1e-6, o).pass);
            CHECK(check_growth(fd, r, Functional::Diam, 1e-6, o).pass);
            CHECK(check_growth(fa, r, Functional::Area, 1e-6, o).pass);
            CHECK(check_don(fd, std::polar(r, 0.37 * trial), 1e-6, o).pass);
            CHECK(check_schur(fr, r, 1e-6, o).pass);
            if (trial % 10 == 0) {
                const auto a = area(f, r);
                const auto len = curve_length(f, r);
                CHECK(check_isoperimetric(a.value, len.value, 1e-6, a.abs_error, len.abs_error).pass);
                for (const auto& rep : check_polya_chain(f, r, 4, 1e-6, o)) CHECK(rep.pass);
            }
        }
    }
}
