#include "schwarz/functionals.hpp"
#include "schwarz/spec_io.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace schwarz;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using testsupport::within;

namespace {
const auto kId = FunctionSpec::polynomial({0.0, 1.0});
const auto kZ2 = FunctionSpec::polynomial({0.0, 0.0, 1.0});
const auto kMoebius = FunctionSpec::moebius(0.0, 0.5, 1.0);
} // namespace

TEST_CASE("radius: catalog examples", "[functionals]") {
    CHECK_THAT(radius(kId, 0.5).value, WithinAbs(0.5, 1e-15));
    CHECK_THAT(radius(kZ2, 0.5).value, WithinAbs(0.25, 1e-15));
    // |f(0.8) - f(0)| = 1, confirmed as the max against dense sampling
    const auto v = radius(kMoebius, 0.8);
    CHECK(v.value >= 1.0 - 1e-15);
    CHECK(v.value <= 1.0 + 1e-9);
    double dense = 0.0;
    for (const auto& w : testsupport::circle(kMoebius, 0.8, 100000)) dense = std::max(dense, std::abs(w + 0.5));
    CHECK(v.value >= dense - 1e-15);
    REQUIRE(v.witness.size() == 1);
    CHECK(std::abs(v.witness[0] - 0.5) < 1e-6);
    CHECK_THROWS_AS(radius(kId, 1.0), DomainError);
    CHECK_THROWS_AS(radius(kId, 0.0), DomainError);
}

TEST_CASE("diameter: catalog examples", "[functionals]") {
    for (double r : {0.1, 0.5, 0.9}) {
        CHECK_THAT(diameter(kId, r).value, WithinAbs(2 * r, 1e-14));
        CHECK_THAT(diameter(FunctionSpec::polynomial({7.0, 1.0}), r).value, WithinAbs(2 * r, 1e-14));
    }
    const auto d = diameter(kZ2, 0.5);
    CHECK_THAT(d.value, WithinAbs(0.5, 1e-15));
    REQUIRE(d.witness.size() == 2);
    CHECK_THAT(std::abs(d.witness[0] - d.witness[1]), WithinAbs(0.5, 1e-14));
}

TEST_CASE("diameter of a constant map is 0 and flagged degenerate", "[functionals]") {
    const auto c = FunctionSpec::polynomial({cplx(2.0, 1.0)});
    const auto d = diameter(c, 0.5);
    CHECK(d.value == 0.0);
    CHECK(d.degenerate);
    CHECK(radius(c, 0.5).degenerate);
}

TEST_CASE("diameter agrees with the all-pairs oracle on random polynomials", "[functionals][property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 5);
        for (double r : {0.3, 0.8}) {
            const auto d = diameter(f, r, 1024);
            // the oracle samples 2048 points; the refined sup must not be below it
            const double brute = testsupport::brute_diameter(testsupport::circle(f, r, 2048));
            CHECK(d.value >= brute - 1e-13);
            CHECK(d.value - brute <= 1e-4 * brute);
            CHECK(std::abs(std::abs(d.witness[0] - d.witness[1]) - d.value) <= 1e-12 * d.value);
        }
    }
}

TEST_CASE("n_diameter: catalog examples", "[functionals]") {
    const auto d3 = n_diameter(kId, 0.999, 3);
    CHECK_THAT(d3.value, WithinAbs(std::sqrt(3.0), 2e-3));
    CHECK_THAT(n_diameter(kId, 0.5, 3).value, WithinAbs(0.5 * std::sqrt(3.0), 1e-12));
    for (const auto& f : {kId, kZ2, FunctionSpec::polynomial({0.0, 1.0, 0.3})}) {
        const auto d2 = n_diameter(f, 0.7, 2);
        const auto dd = diameter(f, 0.7);
        CHECK(d2.value == dd.value);
        CHECK(d2.kind == Functional::NDiam);
    }
    CHECK_THROWS_AS(n_diameter(kId, 0.5, 1), DomainError);
    CHECK_THROWS_AS(n_diameter(kId, 0.5, 9, 32), DomainError); // n > m / 4
}

TEST_CASE("n_diameter is deterministic under a fixed seed", "[functionals]") {
    const auto f = FunctionSpec::polynomial({0.0, 1.0, cplx(0.3, 0.1), -0.2});
    const auto a = n_diameter(f, 0.8, 6, 1024, 8, 42);
    const auto b = n_diameter(f, 0.8, 6, 1024, 8, 42);
    CHECK(a.value == b.value);
    CHECK(a.witness_angles == b.witness_angles);
}

TEST_CASE("d_n is nonincreasing in n and dominated by the diameter", "[functionals][property]") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 4);
        double prev = diameter(f, 0.6, 2048).value;
        for (int n = 3; n <= 8; ++n) {
            const auto d = n_diameter(f, 0.6, n, 2048);
            CHECK(d.value <= prev * (1 + 1e-9) + d.abs_error);
            prev = d.value;
        }
    }
}

TEST_CASE("area: catalog examples", "[functionals]") {
    CHECK_THAT(area(kId, 0.5).value, WithinAbs(kPi / 4, 1e-12));
    const auto a2 = area(kZ2, 0.5);
    CHECK(std::abs(a2.value - kPi * 0.0625) <= 2 * a2.abs_error + 1e-12);
    CHECK(std::abs(a2.value - kPi * 0.0625) <= 1e-4);
    const auto f = FunctionSpec::polynomial({0.0, 1.0, 0.2});
    const auto a = area(f, 0.6);
    const double series = kPi * (0.36 + 2 * 0.04 * 0.1296);
    CHECK(std::abs(a.value - series) <= 2 * a.abs_error + 1e-12);
}

TEST_CASE("area_univalent_series: catalog examples", "[functionals]") {
    CHECK_THAT(area_univalent_series({0.0, 1.0}, 0.5), WithinAbs(kPi / 4, 1e-15));
    CHECK_THAT(area_univalent_series({0.0, 2.0}, 0.5), WithinAbs(kPi, 1e-15));
    CHECK_THAT(area_univalent_series({0.0, 1.0, 0.2}, 0.6), WithinAbs(1.16354538792474, 1e-13));
}

TEST_CASE("area counts the image set, not multiplicity", "[functionals]") {
    // z^3 covers the disk of radius r^3 three times
    const auto z3 = FunctionSpec::polynomial({0.0, 0.0, 0.0, 1.0});
    const auto a = area(z3, 0.8);
    CHECK(std::abs(a.value - kPi * std::pow(0.8, 6)) <= 2 * a.abs_error + 1e-10);
    // the annulus cover past its univalence radius: holes and overlaps
    const auto cover = FunctionSpec::annulus_cover(1.0);
    const auto ac = area(cover, 0.999);
    CHECK_THAT(ac.value, WithinAbs(72.03025958117309, 3 * ac.abs_error + 1e-6));
}

TEST_CASE("area agrees with the raster oracle", "[functionals][property]") {
    std::mt19937_64 rng(29);
    std::vector<FunctionSpec> specs = {kZ2, FunctionSpec::annulus_cover(1.0), FunctionSpec::polynomial({0.0, 0.0, 0.0, 1.0})};
    for (int i = 0; i < 3; ++i) specs.push_back(testsupport::random_polynomial(rng, 4));
    for (const auto& f : specs) {
        const auto a = area(f, 0.95);
        const auto g = area_raster(f, 0.95, 512);
        INFO(to_json(f).dump());
        CHECK(std::abs(a.value - g.value) <= 2 * (a.abs_error + g.abs_error));
    }
}

TEST_CASE("raster sample cap raises ResourceError", "[functionals][errors]") {
    CHECK_THROWS_AS(rasterize(kId, 0.5, 1024, 1000), ResourceError);
}

TEST_CASE("univalence sampling: catalog examples", "[functionals]") {
    const auto v = is_univalent_sampled(kZ2, 0.5);
    CHECK_FALSE(v.univalent);
    REQUIRE(v.witness);
    const auto [w1, w2] = *v.witness;
    CHECK(std::abs(w1 + w2) < 1e-9);
    CHECK(std::abs(evaluate(kZ2, w1) - evaluate(kZ2, w2)) < 1e-9);
    for (double r : {0.1, 0.5, 0.99}) CHECK(is_univalent_sampled(kId, r).univalent);
    const auto cover = FunctionSpec::annulus_cover(1.0);
    CHECK(is_univalent_sampled(cover, 0.9).univalent);
    CHECK_FALSE(is_univalent_sampled(cover, 0.95).univalent);
}

TEST_CASE("perimeter: catalog examples", "[functionals]") {
    for (double r : {0.2, 0.7}) {
        CHECK_THAT(perimeter_univalent(kId, r).value, WithinAbs(2 * kPi * r, 1e-13));
        CHECK_THAT(perimeter_univalent(FunctionSpec::polynomial({cplx(0.0, 7.0), 1.0}), r).value,
                   WithinAbs(2 * kPi * r, 1e-13));
    }
    const auto p = perimeter_univalent(FunctionSpec::polynomial({0.0, 1.0, 0.25}), 0.8);
    REQUIRE(p.cross_check);
    CHECK_THAT(p.value, WithinAbs(*p.cross_check, 1e-6));
    CHECK_THAT(p.value, WithinAbs(5.22970667966045, 1e-11));
    CHECK_THROWS_AS(perimeter_univalent(kZ2, 0.5), UnivalenceError);
}

TEST_CASE("capacity bracket: catalog examples", "[functionals]") {
    const auto c1 = capacity_bracket(kId, 0.5, 4);
    CHECK(c1.lo <= c1.hi);
    CHECK_THAT(c1.lo, WithinAbs(0.5, 1e-6));
    CHECK_THAT(c1.hi, WithinAbs(0.5, 1e-6));
    const auto c2 = capacity_bracket(kZ2, 0.5, 4);
    CHECK_THAT(c2.lo, WithinAbs(0.25, 1e-3));
    CHECK_THAT(c2.hi, WithinAbs(0.25, 1e-6));
    const auto c3 = capacity_bracket(FunctionSpec::annulus_cover(0.1), 0.99, 8);
    CHECK_FALSE(c3.bracket_inverted);
    CHECK(0.0 <= c3.lo);
    CHECK(c3.lo <= c3.hi);
    CHECK_THROWS_AS(capacity_bracket(kId, 0.5, 3), DomainError);
}

TEST_CASE("size functionals are nondecreasing in r", "[functionals][property]") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 5);
        FunctionalOptions o;
        o.m = 1024;
        for (Functional kind : {Functional::Rad, Functional::Diam, Functional::NDiam, Functional::Area}) {
            double prev = 0.0, prev_err = 0.0;
            for (double r : {0.2, 0.4, 0.6, 0.8}) {
                const auto v = compute_functional(f, kind, r, o);
                CHECK(v.value >= prev - 3 * (v.abs_error + prev_err));
                prev = v.value;
                prev_err = v.abs_error;
            }
        }
    }
}

TEST_CASE("capacity chain and isodiametric inequality", "[functionals][property]") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 4);
        for (double r : {0.3, 0.7}) {
            const auto a = area(f, r);
            const auto d4 = n_diameter(f, r, 4, 2048);
            const auto d2 = diameter(f, r);
            const double lo = std::sqrt(std::max(a.value - a.abs_error, 0.0) / kPi);
            const double hi = (d4.value + d4.abs_error) / std::cbrt(4.0);
            CHECK(lo <= hi * (1 + 1e-9));
            CHECK(hi <= d4.value + d4.abs_error);
            CHECK(a.value <= kPi * 0.25 * d2.value * d2.value + 3 * (a.abs_error + d2.abs_error * d2.value));
        }
    }
}

TEST_CASE("scaling and translation equivariance", "[functionals][property]") {
    const auto f = FunctionSpec::polynomial({0.0, 1.0, cplx(0.25, 0.1), -0.1});
    const double s = 2.5;
    const auto fs = scaled(f, s);
    const auto ft = translated(f, cplx(3.0, -4.0));
    FunctionalOptions o;
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::NDiam, Functional::Area, Functional::Perim}) {
        const auto v = compute_functional(f, kind, 0.6, o);
        const auto vs = compute_functional(fs, kind, 0.6, o);
        const auto vt = compute_functional(ft, kind, 0.6, o);
        const double p = kind == Functional::Area ? s * s : s;
        INFO(to_string(kind));
        CHECK(std::abs(vs.value - p * v.value) <= 2 * (vs.abs_error + p * v.abs_error) + 1e-12 * vs.value);
        CHECK(std::abs(vt.value - v.value) <= 2 * (vt.abs_error + v.abs_error) + 1e-12 * v.value);
    }
}

TEST_CASE("unit-disk values", "[functionals]") {
    CHECK_THAT(unit_disk_value(kMoebius, Functional::Diam).value, WithinAbs(2.0, 1e-12));
    CHECK_THAT(unit_disk_value(FunctionSpec::polynomial({0.0, 0.0, 0.0, 0.0, 0.0, 1.0}), Functional::Diam).value,
               WithinAbs(2.0, 1e-12));
    // the full annulus of c = 1 has diameter 2 e^{pi/2} = 9.6210; the estimate
    // is a lower bound extrapolated from r = 0.998, 0.999
    const auto d = unit_disk_value(FunctionSpec::annulus_cover(1.0), Functional::Diam);
    CHECK(d.value <= 2 * std::exp(kPi / 2) + d.abs_error);
    CHECK(d.value >= 2 * std::exp(kPi / 2) - d.abs_error);
}
