// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "schwarz/bounds.hpp"
#include "schwarz/counterexample.hpp"
#include "schwarz/growth.hpp"
#include "schwarz/hyperbolic.hpp"
#include "schwarz/identities.hpp"

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace schwarz;
using testsupport::within;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << " first failure: " << what << ";";
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome disk_n_diameter() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto id = FunctionSpec::polynomial({0.0, 1.0});
    double worst = 0.0, worst_roots = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const auto d = n_diameter(id, 0.999, n, 2048, 8, 0);
        const double target = std::pow(n, 1.0 / (n - 1));
        worst = std::max(worst, std::abs(d.value - target));
        o.require(within(d.value, target, 2e-3), "d_" + std::to_string(n));
        std::vector<cplx> w;
        for (auto z : d.witness) w.push_back(z / 0.999);
        const auto m = align_to_roots(PointTuple(w));
        worst_roots = std::max(worst_roots, m.max_deviation);
        o.require(m.max_deviation <= 5e-3, "roots n=" + std::to_string(n));
    }
    const double secs = seconds_since(t0);
    o.require(secs <= 30.0, "runtime");
    o.detail << " max|d_n - n^(1/(n-1))|=" << worst << " max_root_dev=" << worst_roots << " time=" << secs << "s";
    return o;
}

Outcome linear_invariance() {
    Outcome o;
    const auto f = FunctionSpec::polynomial({5.0, 3.0});
    const auto grid = default_grid();
    FunctionalOptions opts;
    opts.m = 2048;
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::NDiam, Functional::CapBracket,
                            Functional::Area, Functional::Perim}) {
        const auto c = phi_curve(f, kind, grid, opts);
        const double target = kind == Functional::Area ? 9.0 : 3.0;
        for (std::size_t i = 0; i < c.phi.size(); ++i) {
            const double err = c.abs_error[i];
            o.require(std::abs(c.phi[i] - target) <= 3.0 * err + 1e-12 * target,
                      to_string(kind) + " not constant at r=" + std::to_string(grid[i]));
            if (kind == Functional::Rad) o.require(within(c.phi[i], 3.0, 1e-9), "Rad value");
            if (kind == Functional::Area) o.require(within(c.phi[i], 9.0, 2.0 * err), "Area value");
        }
    }
    o.detail << " six curves on the 17-point grid";
    return o;
}

Outcome strict_growth() {
    Outcome o;
    const auto f = FunctionSpec::polynomial({0.0, 1.0, 0.2});
    const auto grid = default_grid();
    FunctionalOptions opts;
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::Area, Functional::NDiam}) {
        const auto c = phi_curve(f, kind, grid, opts);
        o.require(c.monotone && c.monotone->pass && c.monotone->strict, to_string(kind) + " strict");
    }
    for (Functional kind : {Functional::Rad, Functional::NDiam, Functional::CapBracket}) {
        const auto c = phi_curve(f, kind, grid, opts);
        o.require(c.log_convex && c.log_convex->pass, to_string(kind) + " log-convex");
        if (c.log_convex) o.detail << " " << to_string(kind) << "_worst_d2=" << c.log_convex->worst_second_diff;
    }
    return o;
}

Outcome counterexample() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto run = check_not_log_convex(0.1, 33);
    o.require(run.min_second_diff < -1e-4, "no second difference below -1e-4");
    bool straddles = false;
    for (std::size_t i = 1; i < run.regimes.size(); ++i) straddles |= run.regimes[i] != run.regimes[i - 1];
    o.require(straddles, "grid does not straddle the threshold");
    double worst_gap = 0.0;
    for (double c : {0.1, 1.0}) {
        const double L = threshold_depth(c);
        const auto u = area_annulus_cover_depth(c, L, 1e-10, Regime::Univalent);
        const auto fm = area_annulus_cover_depth(c, L, 1e-10, Regime::Formula);
        worst_gap = std::max(worst_gap, std::abs(u.value - fm.value));
        o.require(std::abs(u.value - fm.value) <= 1e-4, "regimes disagree at the threshold");
    }
    const double secs = seconds_since(t0);
    o.require(secs <= 60.0, "runtime");
    o.detail << " min_d2=" << run.min_second_diff << " regime_gap=" << worst_gap << " time=" << secs << "s";
    return o;
}

Outcome limit_profile_check() {
    Outcome o;
    const double t1 = limit_target(1.0);
    o.require(within(t1, -0.5 * kPi * std::log(2.0), 1e-8), "target(1)");
    const std::vector<double> x = {0.25, 0.5, 0.75};
    const auto a = limit_profile(0.01, x);
    const auto b = limit_profile(0.05, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double da = std::abs(a[i].value - a[i].target), db = std::abs(b[i].value - b[i].target);
        o.require(da < db, "no convergence at x=" + std::to_string(x[i]));
        o.detail << " x=" << x[i] << ":" << da << "<" << db;
    }
    o.detail << " target(1)=" << t1;
    return o;
}

Outcome don_sharpness() {
    Outcome o;
    const auto m = FunctionSpec::moebius(0.0, 0.5, 1.0);
    const auto d = unit_disk_value(m, Functional::Diam);
    o.require(within(d.value, 2.0, 1e-3), "Diam f(D)");
    const auto eq = check_don(m, 0.8);
    o.require(eq.pass && eq.equality && std::abs(eq.slack) <= 1e-6, "equality at z = 0.8");
    int strict = 0;
    for (int k = 1; k <= 50; ++k) {
        const auto rep = check_don(m, (k - 0.5) / 50.0);
        o.require(rep.pass, "Don fails");
        strict += rep.slack > 1e-4;
    }
    o.require(strict >= 49, "strict at fewer than 49 radii");
    o.detail << " Diam=" << d.value << " slack(0.8)=" << eq.slack << " strict=" << strict << "/50";
    return o;
}

Outcome poukka() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        std::vector<cplx> c(n + 1, 0.0);
        c[n] = 1.0;
        const auto rep = check_poukka(FunctionSpec::polynomial(c), n);
        o.require(rep.pass && rep.equality && std::abs(rep.slack) <= 1e-6, "z^" + std::to_string(n));
    }
    std::mt19937_64 rng(2024);
    double min_slack = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 5);
        for (int n = 1; n <= 5; ++n) {
            const auto rep = check_poukka(f, n);
            o.require(rep.pass && rep.slack > 0.0, "random polynomial");
            min_slack = std::min(min_slack, rep.slack);
        }
    }
    o.detail << " 100 random polynomials, min_slack=" << min_slack;
    return o;
}

FunctionSpec schur_extremal() {
    std::vector<cplx> c(60, 0.0);
    c[1] = 0.5;
    for (int k = 1; k + 1 < 60; ++k) c[k + 1] = 0.75 * std::pow(-0.5, k - 1);
    return FunctionSpec::series(c);
}

Outcome schur() {
    Outcome o;
    double worst = 0.0;
    const auto z2 = FunctionSpec::polynomial({0.0, 0.0, 1.0});
    for (double r : {0.25, 0.5, 0.75}) {
        const auto rep = check_schur(z2, r);
        worst = std::max(worst, std::abs(rep.slack));
        o.require(rep.pass && std::abs(rep.slack) <= 1e-6, "z^2");
    }
    const auto rep = check_schur(schur_extremal(), 0.6);
    worst = std::max(worst, std::abs(rep.slack));
    o.require(rep.pass && std::abs(rep.slack) <= 1e-6, "extremal");
    o.detail << " max|slack|=" << worst;
    return o;
}

Outcome identity_suite() {
    Outcome o;
    double worst = 0.0;
    for (int n = 2; n <= 64; ++n)
        for (int j = 1; j <= n; ++j) {
            const auto a = roots_of_unity_sum(n, j);
            const auto b = second_sum(n, j);
            worst = std::max({worst, a.residual, b.residual});
            o.require(a.pass && b.pass && a.residual <= 1e-10 && b.residual <= 1e-10, "sum identity");
        }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int matched = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<cplx> w(2 + trial % 15);
        for (auto& z : w) z = std::polar(std::sqrt(u(rng)), 2 * kPi * u(rng));
        const PointTuple t(w);
        const bool ok = vandermonde_check(t).match && hadamard_bound_check(t).pass;
        matched += ok;
        o.require(ok, "tuple " + std::to_string(trial));
    }
    o.detail << " max_residual=" << worst << " tuples=" << matched << "/200";
    return o;
}

Outcome inequality_chain() {
    Outcome o;
    std::mt19937_64 rng(99);
    FunctionalOptions opts;
    opts.m = 2048;
    int reports = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = testsupport::random_polynomial(rng, 4);
        for (double r : {0.3, 0.6, 0.9}) {
            const auto a = area(f, r);
            const auto len = curve_length(f, r);
            auto reps = check_polya_chain(f, r, 4, 1e-6, opts);
            reps.push_back(check_isoperimetric(a.value, len.value, 1e-6, a.abs_error, len.abs_error));
            for (const auto& rep : reps) {
                ++reports;
                // slack >= -3 x propagated error is implied by pass; both are checked
                o.require(rep.pass, to_string(rep.name) + " trial " + std::to_string(trial));
            }
        }
    }
    o.detail << " reports=" << reports;
    return o;
}

Outcome hyperbolic() {
    Outcome o;
    const auto cover = FunctionSpec::annulus_cover(1.0);
    const double rho = density_via_cover(cover, 0.0);
    o.require(within(rho, 0.5, 1e-9), "density");
    const auto rep = check_density_lower_bound(cover, 0.0);
    o.require(rep.pass && within(rep.rhs, 0.2083, 1e-3), "lower bound");
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto point = [&](double rmax) { return std::polar(rmax * std::sqrt(u(rng)), 2 * kPi * u(rng)); };
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const cplx z = point(0.9), w = point(0.9), a = point(0.5);
        const cplx rot = std::polar(1.0, 2 * kPi * u(rng));
        auto T = [&](cplx x) { return rot * (x - a) / (1.0 - std::conj(a) * x); };
        const double h = hyp_distance_disk(z, w);
        const double dev = std::abs(hyp_distance_disk(T(z), T(w)) - h);
        worst = std::max(worst, dev / std::max(1.0, h));
        o.require(dev <= 1e-12 * std::max(1.0, h), "invariance");
    }
    o.detail << " rho=" << rho << " rhs=" << rep.rhs << " max_invariance_dev=" << worst;
    return o;
}

Outcome oracle_cross_check() {
    Outcome o;
    std::mt19937_64 rng(12);
    double worst_area = 0.0, worst_len = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = testsupport::random_univalent_polynomial(rng, 2 + trial % 5);
        const double series = area_univalent_series(taylor_coefficients(f, 8), 0.5);
        const double series_err = 64.0 * std::numeric_limits<double>::epsilon() * series;
        for (const auto& a : {area(f, 0.5), area_raster(f, 0.5)}) {
            const double ratio = std::abs(a.value - series) / (a.abs_error + series_err);
            worst_area = std::max(worst_area, ratio);
            o.require(ratio <= 2.0, "area trial " + std::to_string(trial));
        }
        const auto p = perimeter_univalent(f, 0.5);
        o.require(p.cross_check.has_value(), "no length series");
        if (p.cross_check) {
            worst_len = std::max(worst_len, std::abs(p.value - *p.cross_check));
            o.require(std::abs(p.value - *p.cross_check) <= 1e-6, "perimeter trial " + std::to_string(trial));
        }
    }
    o.detail << " max area dev/err=" << worst_area << " max|length - series|=" << worst_len;
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"disk n-diameter and Fekete roots", disk_n_diameter},
        {"linear invariance", linear_invariance},
        {"strict growth for z + 0.2z^2", strict_growth},
        {"annulus cover area not log-convex", counterexample},
        {"limit profile", limit_profile_check},
        {"Don sharpness", don_sharpness},
        {"Poukka", poukka},
        {"Schur bound", schur},
        {"identity suite", identity_suite},
        {"inequality chain", inequality_chain},
        {"hyperbolic density", hyperbolic},
        {"oracle cross-check", oracle_cross_check},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << " exception: " << e.what();
        }
        failed += !out.pass;
        std::printf("criterion %2zu %s  %s:%s\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first,
                    out.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
