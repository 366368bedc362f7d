#pragma once

// Normalized growth curves phi(r) = F(f(r D)) / F(r D) and the discrete
// monotonicity / convexity verdicts run on them.

#include "schwarz/errors.hpp"
#include "schwarz/format.hpp"
#include "schwarz/functionals.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace schwarz {

struct MonotoneVerdict {
    bool pass = true;
    bool strict = false;
    std::optional<std::size_t> first_violation; // index i with phi[i+1] < phi[i] - tol
    double min_forward_diff = 0.0;
    double tol = 0.0;
};

struct ConvexVerdict {
    bool pass = true;
    double worst_second_diff = 0.0;
    std::size_t worst_index = 0; // center index of the worst second difference
    std::optional<bool> loglog_pass; // set only when phi > 1 on the whole grid
    double loglog_worst = 0.0;
    double tol = 0.0;
};

struct GrowthCurve {
    Functional kind = Functional::Rad;
    int n = 0;
    std::vector<double> r_grid;
    std::vector<double> log_r;
    std::vector<double> phi;
    std::vector<double> abs_error;     // propagated error of phi
    std::vector<double> bracket_width; // Cap only: (hi - lo) / r
    std::vector<double> normalization;
    bool constant_zero = false;
    std::optional<MonotoneVerdict> monotone;
    std::optional<ConvexVerdict> log_convex;
    std::vector<FunctionalValue> raw;
};

/// The divisor F(r D) for each kind.
inline double normalization(Functional kind, int n, double r) {
    switch (kind) {
    case Functional::Rad: return r;
    case Functional::Diam: return 2.0 * r;
    case Functional::NDiam: return std::pow(static_cast<double>(n), 1.0 / (n - 1)) * r;
    case Functional::CapBracket: return r;
    case Functional::Area: return kPi * r * r;
    case Functional::Perim: return 2.0 * kPi * r;
    }
    return 1.0;
}

inline std::string normalization_name(Functional kind) {
    switch (kind) {
    case Functional::Rad: return "r";
    case Functional::Diam: return "2r";
    case Functional::NDiam: return "d_n(D)r";
    case Functional::CapBracket: return "r";
    case Functional::Area: return "pi r^2";
    case Functional::Perim: return "2 pi r";
    }
    return "?";
}

/// `points` values r_min q^k, geometric; the endpoints are hit exactly.
inline std::vector<double> geometric_grid(double r_min, double r_max, int points) {
    if (!(r_min > 0.0 && r_max < 1.0 && r_min < r_max)) throw GridError("grid bounds must satisfy 0 < r_min < r_max < 1");
    if (points < 3) throw GridError("grid needs at least 3 points");
    std::vector<double> g(points);
    const double a = std::log(r_min), b = std::log(r_max);
    for (int k = 0; k < points; ++k) g[k] = std::exp(a + (b - a) * k / (points - 1));
    g.front() = r_min;
    g.back() = r_max;
    return g;
}

inline std::vector<double> default_grid() { return geometric_grid(0.05, 0.95, 17); }

inline double monotone_tolerance(const GrowthCurve& c) {
    double e = 0.0, w = 0.0;
    for (std::size_t i = 0; i < c.phi.size(); ++i) {
        e = std::max(e, c.abs_error[i]);
        w = std::max(w, c.bracket_width[i]);
    }
    return 3.0 * e + w;
}

/// Tolerance for raw second differences of log phi: each difference combines
/// four log-errors, and rounding of the log itself is included.
inline double log_convex_tolerance(const GrowthCurve& c) {
    double e = 0.0, w = 0.0;
    for (std::size_t i = 0; i < c.phi.size(); ++i) {
        if (c.phi[i] <= 0.0) continue;
        const double lp = std::log(c.phi[i]);
        e = std::max(e, c.abs_error[i] / c.phi[i] + 8.0 * detail::kEps * (1.0 + std::abs(lp)));
        w = std::max(w, c.bracket_width[i] / c.phi[i]);
    }
    return 3.0 * 4.0 * e + 4.0 * w;
}

inline MonotoneVerdict check_monotone(const GrowthCurve& c, double tol) {
    MonotoneVerdict v;
    v.tol = tol;
    if (c.constant_zero) return v;
    v.min_forward_diff = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < c.phi.size(); ++i) {
        const double d = c.phi[i + 1] - c.phi[i];
        v.min_forward_diff = std::min(v.min_forward_diff, d);
        if (d < -tol && !v.first_violation) {
            v.first_violation = i;
            v.pass = false;
        }
    }
    v.strict = v.min_forward_diff > tol;
    return v;
}

namespace detail {

inline void require_uniform_log_steps(const std::vector<double>& log_r) {
    if (log_r.size() < 3) throw GridError("convexity check needs at least 3 grid points");
    const double h = (log_r.back() - log_r.front()) / static_cast<double>(log_r.size() - 1);
    for (std::size_t i = 0; i + 1 < log_r.size(); ++i) {
        const double s = log_r[i + 1] - log_r[i];
        if (!(std::abs(s - h) <= 1e-9 * std::abs(h)))
            throw GridError("grid is not uniform in log r (step " + fmt17(s) + " vs mean " + fmt17(h) + ")");
    }
}

} // namespace detail

/// Raw second differences log phi[i-1] - 2 log phi[i] + log phi[i+1] on a grid
/// uniform in log r must be >= -tol.
inline ConvexVerdict check_log_convex(const GrowthCurve& c, double tol) {
    detail::require_uniform_log_steps(c.log_r);
    ConvexVerdict v;
    v.tol = tol;
    if (c.constant_zero) return v;
    std::vector<double> lp(c.phi.size());
    for (std::size_t i = 0; i < lp.size(); ++i) lp[i] = std::log(c.phi[i]);
    v.worst_second_diff = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < lp.size(); ++i) {
        const double d2 = lp[i - 1] - 2.0 * lp[i] + lp[i + 1];
        if (d2 < v.worst_second_diff) {
            v.worst_second_diff = d2;
            v.worst_index = i;
        }
    }
    v.pass = v.worst_second_diff >= -tol;

    const double min_lp = *std::min_element(lp.begin(), lp.end());
    if (min_lp > 0.0) {
        const double ll_tol = tol / min_lp;
        v.loglog_worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i + 1 < lp.size(); ++i)
            v.loglog_worst = std::min(v.loglog_worst,
                                      std::log(lp[i - 1]) - 2.0 * std::log(lp[i]) + std::log(lp[i + 1]));
        v.loglog_pass = v.loglog_worst >= -ll_tol;
    }
    return v;
}

namespace detail {

inline void validate_grid(const std::vector<double>& g) {
    if (g.size() < 3) throw GridError("grid needs at least 3 points");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g[i] > 0.0 && g[i] < 1.0)) throw DomainError("grid points must lie in (0, 1)");
        if (i > 0 && !(g[i] > g[i - 1])) throw GridError("grid must be strictly increasing");
    }
}

// Runs body(i) for i in [0, count) on up to `jobs` threads; rethrows the
// exception of the lowest failing index.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](std::size_t i) {
        try {
            body(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) run(i);
            });
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

/// phi at each grid point with propagated errors. Verdicts use the default
/// tolerances; the log-convexity verdict is left empty on grids that are not
/// geometric.
inline GrowthCurve phi_curve(const FunctionSpec& spec, Functional kind, const std::vector<double>& r_grid,
                             const FunctionalOptions& opts = {}, int jobs = 1) {
    detail::validate_grid(r_grid);
    GrowthCurve c;
    c.kind = kind;
    c.n = (kind == Functional::NDiam || kind == Functional::CapBracket) ? opts.n : 0;
    c.r_grid = r_grid;
    const std::size_t k = r_grid.size();
    c.log_r.resize(k);
    c.phi.resize(k);
    c.abs_error.resize(k);
    c.bracket_width.assign(k, 0.0);
    c.normalization.resize(k);
    c.raw.resize(k);

    detail::parallel_for(k, jobs, [&](std::size_t i) { c.raw[i] = compute_functional(spec, kind, r_grid[i], opts); });

    bool all_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
        const double r = r_grid[i];
        const auto& v = c.raw[i];
        c.log_r[i] = std::log(r);
        c.normalization[i] = normalization(kind, c.n, r);
        if (kind == Functional::CapBracket) {
            c.phi[i] = v.hi / c.normalization[i];
            c.abs_error[i] = v.endpoint_error / c.normalization[i];
            c.bracket_width[i] = (v.hi - v.lo) / c.normalization[i];
        } else {
            c.phi[i] = v.value / c.normalization[i];
            c.abs_error[i] = v.abs_error / c.normalization[i];
        }
        if (c.phi[i] != 0.0) all_zero = false;
    }
    c.constant_zero = all_zero;

    c.monotone = check_monotone(c, monotone_tolerance(c));
    try {
        c.log_convex = check_log_convex(c, log_convex_tolerance(c));
    } catch (const GridError&) {
        c.log_convex.reset();
    }
    return c;
}

struct LimitCheck {
    double r = 1e-3;
    double phi = 0.0;
    double target = 0.0; // |f'(0)|, squared for Area
    double abs_error = 0.0;
    double difference = 0.0;
};

/// phi at r = 1e-3 against |f'(0)| (|f'(0)|^2 for Area).
inline LimitCheck limit_at_zero(const FunctionSpec& spec, Functional kind, const FunctionalOptions& opts = {}) {
    LimitCheck out;
    const auto v = compute_functional(spec, kind, out.r, opts);
    const double norm = normalization(kind, opts.n, out.r);
    out.phi = (kind == Functional::CapBracket ? v.hi : v.value) / norm;
    out.abs_error = (kind == Functional::CapBracket ? v.endpoint_error : v.abs_error) / norm;
    const double d = std::abs(derivative(spec, 0.0));
    out.target = kind == Functional::Area ? d * d : d;
    out.difference = out.phi - out.target;
    return out;
}

/// CSV with a comment header; every row carries the spec hash and seed.
inline void write_curve_csv(std::ostream& os, const GrowthCurve& c, const std::string& spec_hash,
                            std::uint64_t seed) {
    os << "# kind=" << to_string(c.kind);
    if (c.n) os << " n=" << c.n;
    os << " normalization=" << normalization_name(c.kind) << " spec_hash=" << spec_hash << " seed=" << seed << "\n";
    os << "r,phi,abs_error,spec_hash,seed\n";
    for (std::size_t i = 0; i < c.phi.size(); ++i)
        os << fmt17(c.r_grid[i]) << ',' << fmt17(c.phi[i]) << ',' << fmt17(c.abs_error[i] + c.bracket_width[i]) << ','
           << spec_hash << ',' << seed << "\n";
}

} // namespace schwarz
