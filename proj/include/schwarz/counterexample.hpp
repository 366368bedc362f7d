#pragma once

// Area of f_c(r D) for the annulus cover f_c = exp(i c log((1+z)/(1-z))),
// where log-convexity of the area function breaks down for small c.
//
// Radii are handled through the depth s = -log r. For small c the threshold
// radius tanh(pi / (2c)) sits within 1e-13 of 1, where doubles cannot resolve
// r itself but represent s exactly; note (1 - r^2) / (1 + r^2) = tanh s.

#include "schwarz/analytic.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace schwarz {

enum class Regime { Univalent, Formula };

inline std::string to_string(Regime r) { return r == Regime::Univalent ? "univalent" : "formula"; }

struct AnnulusArea {
    double s = 0.0;      // depth -log r
    double value = 0.0;
    double abs_error = 0.0;
    Regime regime = Regime::Univalent;
    long clamp_trips = 0; // arccos / arcsin arguments pulled back into [-1, 1]
};

namespace detail {

inline void check_c(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be a positive real");
}

// log cosh y without overflow.
inline double log_cosh(double y) {
    y = std::abs(y);
    return y + std::log1p(std::exp(-2.0 * y)) - std::log(2.0);
}

// log tanh(exp(log_y)) without underflow for tiny y.
inline double log_tanh_of_log(double log_y) {
    const double y = std::exp(log_y);
    if (y < 1e-4) return log_y - y * y / 3.0;
    return std::log(std::tanh(y));
}

inline double clamp_unit(double x, long& trips) {
    if (x > 1.0) {
        ++trips;
        return 1.0;
    }
    if (x < -1.0) {
        ++trips;
        return -1.0;
    }
    return x;
}

// Breakpoints a, a + d, a + 2d, a + 4d, ... up to b (d = first step),
// resolving behaviour concentrated near a over many scales.
inline std::vector<double> geometric_breaks(double a, double b, double first) {
    std::vector<double> bp{a};
    for (double d = first; a + d < b; d *= 2.0) bp.push_back(a + d);
    bp.push_back(b);
    return bp;
}

} // namespace detail

/// tanh(pi / (2c)), the radius below which f_c is univalent. Rounds to 1 for
/// c below about 0.045; `threshold_depth` stays exact.
inline double univalence_threshold(double c) {
    detail::check_c(c);
    return std::tanh(kPi / (2.0 * c));
}

/// log of the threshold depth L = -log tanh(pi / (2c)) = log coth(pi / (2c)).
inline double log_threshold_depth(double c) {
    detail::check_c(c);
    const double u = kPi / (2.0 * c);
    const double q = std::exp(-2.0 * u);
    // L = 2 artanh(q) = 2 q (artanh(q) / q)
    const double ratio = q < 1e-4 ? 1.0 + q * q / 3.0 : std::atanh(q) / q;
    return std::log(2.0) - 2.0 * u + std::log(ratio);
}

inline double threshold_depth(double c) { return std::exp(log_threshold_depth(c)); }

/// Area at depth s. Below the threshold (s >= L) f_c is univalent and the
/// area is the integral of |f'|^2, taken in the coordinates
/// psi = i log((1+z)/(1-z)) where it reduces to
///   A = int_{w0}^{pi/2} 4c^2 cosh(2c(pi/2 - w)) arccosh(sin w coth s) dw,
/// w0 = arcsin(tanh s). Past the threshold (s <= L)
///   A = int_0^pi 2 sinh(2c arccos(tanh s cosh(t/c))) dt.
/// `force` selects a regime regardless of s (both are valid at s = L).
inline AnnulusArea area_annulus_cover_depth(double c, double s, double quad_tol = 1e-8,
                                            std::optional<Regime> force = std::nullopt) {
    detail::check_c(c);
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("area_annulus_cover: depth must be positive");
    const double L = threshold_depth(c);
    AnnulusArea out;
    out.s = s;
    out.regime = force ? *force : (s >= L ? Regime::Univalent : Regime::Formula);
    QuadratureOptions qo;
    qo.abs_tol = quad_tol;
    qo.max_intervals = 200000;
    long trips = 0;

    if (out.regime == Regime::Univalent) {
        if (s < L * (1.0 - 1e-12)) throw DomainError("area_annulus_cover: univalent route needs s >= threshold depth");
        const double ts = std::tanh(s);
        const double w0 = std::asin(ts);
        const double span = 0.5 * kPi - w0;
        auto integrand = [&](double tau) {
            const double w = w0 + tau;
            // sin w / tanh s - 1, without cancellation
            const double delta = std::max(2.0 * std::cos(w0 + 0.5 * tau) * std::sin(0.5 * tau) / ts, 0.0);
            const double acosh1p = std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
            return 4.0 * c * c * std::cosh(2.0 * c * (0.5 * kPi - w)) * acosh1p;
        };
        const auto bp = detail::geometric_breaks(0.0, span, std::max(std::min(w0, span) * 0.5, span * 1e-300));
        const auto q = integrate(integrand, std::span<const double>(bp), qo);
        out.value = q.value;
        out.abs_error = q.abs_error;
    } else {
        const double log_ts = std::log(std::tanh(s));
        auto integrand = [&](double t) {
            const double x = detail::clamp_unit(std::exp(log_ts + detail::log_cosh(t / c)), trips);
            return 2.0 * std::sinh(2.0 * c * std::acos(x));
        };
        // The arccos argument reaches 1 at t = pi exactly at the threshold,
        // with square-root behaviour there.
        std::vector<double> bp{0.0};
        for (int k = 1; k <= 12; ++k) bp.push_back(kPi - kPi * std::ldexp(1.0, -2 * k));
        bp.push_back(kPi);
        const auto q = integrate(integrand, std::span<const double>(bp), qo);
        out.value = q.value;
        out.abs_error = q.abs_error;
    }
    out.clamp_trips = trips;
    return out;
}

inline AnnulusArea area_annulus_cover(double c, double r, double quad_tol = 1e-8) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("area_annulus_cover: r must lie in (0, 1)");
    return area_annulus_cover_depth(c, -std::log(r), quad_tol);
}

/// Area of the full annulus, the r -> 1 limit: 2 pi sinh(pi c).
inline double annulus_area_limit(double c) {
    detail::check_c(c);
    return 2.0 * kPi * std::sinh(kPi * c);
}

struct CounterexampleRun {
    double c = 0.0;
    double threshold = 0.0;       // tanh(pi / (2c)), possibly rounded to 1
    double threshold_depth = 0.0; // exact depth L
    std::vector<double> x_grid;   // depth in units of L, decreasing (r increasing)
    std::vector<double> r_grid;   // exp(-x L), rounded
    std::vector<double> log_r;    // -x L, exact
    std::vector<double> A_values;
    std::vector<double> A_errors;
    std::vector<Regime> regimes;
    std::vector<double> second_diffs; // at interior points 1 .. size-2, in grid order
    double min_second_diff = 0.0;
    double quad_tol = 0.0;
    bool not_log_convex = false; // some second difference < -10 quad_tol
    long clamp_trips = 0;
};

/// A on the grid of depths s = x L, x = x_first + k x_step (k < points),
/// ordered by increasing r, with raw second differences of log A against
/// log r (the grid is uniform in log r).
inline CounterexampleRun check_not_log_convex(double c, int points = 33, double quad_tol = 1e-8,
                                              double x_first = 1.0 / 16.0, double x_step = 1.0 / 16.0) {
    detail::check_c(c);
    if (points < 3) throw GridError("check_not_log_convex: need at least 3 points");
    if (!(x_first > 0.0 && x_step > 0.0)) throw GridError("check_not_log_convex: grid must be positive");
    CounterexampleRun run;
    run.c = c;
    run.quad_tol = quad_tol;
    run.threshold = univalence_threshold(c);
    const double log_L = log_threshold_depth(c);
    run.threshold_depth = std::exp(log_L);
    for (int k = points - 1; k >= 0; --k) {
        const double x = x_first + k * x_step;
        const double s = x * run.threshold_depth;
        const auto a = area_annulus_cover_depth(c, s, quad_tol);
        run.x_grid.push_back(x);
        run.log_r.push_back(-s);
        run.r_grid.push_back(std::exp(-s));
        run.A_values.push_back(a.value);
        run.A_errors.push_back(a.abs_error);
        run.regimes.push_back(a.regime);
        run.clamp_trips += a.clamp_trips;
    }
    run.min_second_diff = std::numeric_limits<double>::infinity();
    for (int i = 1; i + 1 < points; ++i) {
        const double d2 = std::log(run.A_values[i - 1]) - 2.0 * std::log(run.A_values[i]) + std::log(run.A_values[i + 1]);
        run.second_diffs.push_back(d2);
        run.min_second_diff = std::min(run.min_second_diff, d2);
    }
    run.not_log_convex = run.min_second_diff < -10.0 * quad_tol;
    return run;
}

struct ProfilePoint {
    double x = 0.0;
    double value = 0.0;  // (A_c(r_x) - 2 pi sinh(c pi)) / (4 c^2), r_x = exp(-x L)
    double target = 0.0; // -int_0^x arcsin(u) / u du
    double value_error = 0.0;
    double target_error = 0.0;
};

/// -int_0^x arcsin(u) / u du.
inline double limit_target(double x, double* err = nullptr) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("limit_target: x must lie in [0, 1]");
    if (x == 0.0) {
        if (err) *err = 0.0;
        return 0.0;
    }
    QuadratureOptions qo;
    qo.abs_tol = 1e-14;
    auto f = [](double u) { return u == 0.0 ? 1.0 : std::asin(u) / u; };
    std::vector<double> pts{0.0};
    // Refine toward u = 1, where arcsin has a square-root singularity.
    for (int k = 1; k <= 30; ++k) {
        const double p = 1.0 - std::ldexp(1.0, -k);
        if (p > 0.0 && p < x) pts.push_back(p);
    }
    pts.push_back(x);
    const auto q = integrate(f, std::span<const double>(pts), qo);
    if (err) *err = q.abs_error;
    return -q.value;
}

/// The scaled area deficit at depth x L, computed without cancellation:
/// with X(u) = tanh(x L) cosh u,
///   value = -int_0^{pi/c} cosh(c (arccos X + pi/2)) sinh(c arcsin X) / c du,
/// integrated in w = pi/c - u, where the integrand lives near w = 0.
inline std::vector<ProfilePoint> limit_profile(double c, const std::vector<double>& x_grid, double quad_tol = 1e-12) {
    detail::check_c(c);
    const double log_L = log_threshold_depth(c);
    const double top = kPi / c;
    std::vector<ProfilePoint> out;
    for (double x : x_grid) {
        if (!(x > 0.0 && x <= 1.0)) throw DomainError("limit_profile: x must lie in (0, 1]");
        const double log_ts = detail::log_tanh_of_log(std::log(x) + log_L);
        long trips = 0;
        auto integrand = [&](double w) {
            const double X = detail::clamp_unit(std::exp(log_ts + detail::log_cosh(top - w)), trips);
            const double as = std::asin(X);
            return -std::cosh(c * (std::acos(X) + 0.5 * kPi)) * std::sinh(c * as) / c;
        };
        std::vector<double> bp{0.0};
        for (double w = 1.0; w < top; w *= 2.0) bp.push_back(w);
        bp.push_back(top);
        QuadratureOptions qo;
        qo.abs_tol = quad_tol;
        qo.max_intervals = 200000;
        const auto q = integrate(integrand, std::span<const double>(bp), qo);
        ProfilePoint p;
        p.x = x;
        p.value = q.value;
        p.value_error = q.abs_error;
        p.target = limit_target(x, &p.target_error);
        out.push_back(p);
    }
    return out;
}

} // namespace schwarz
