#pragma once

// Size functionals of the image set f(r D): Rad, Diam, d_n, a capacity
// bracket, Area and boundary length, each with an error estimate.

#include "schwarz/analytic.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/geometry.hpp"
#include "schwarz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace schwarz {

enum class Functional { Rad, Diam, NDiam, CapBracket, Area, Perim };

inline std::string to_string(Functional k) {
    switch (k) {
    case Functional::Rad: return "Rad";
    case Functional::Diam: return "Diam";
    case Functional::NDiam: return "NDiam";
    case Functional::CapBracket: return "Cap";
    case Functional::Area: return "Area";
    case Functional::Perim: return "Perim";
    }
    return "?";
}

inline Functional functional_from_string(const std::string& s) {
    if (s == "Rad" || s == "rad") return Functional::Rad;
    if (s == "Diam" || s == "diam") return Functional::Diam;
    if (s == "NDiam" || s == "ndiam") return Functional::NDiam;
    if (s == "Cap" || s == "cap" || s == "CapBracket") return Functional::CapBracket;
    if (s == "Area" || s == "area") return Functional::Area;
    if (s == "Perim" || s == "perim") return Functional::Perim;
    throw DomainError("unknown functional '" + s + "'");
}

struct FunctionalValue {
    Functional kind = Functional::Rad;
    int n = 0;            // order for NDiam and CapBracket
    double value = 0.0;   // CapBracket: midpoint of [lo, hi]
    double lo = 0.0;
    double hi = 0.0;
    double abs_error = 0.0;
    std::vector<cplx> witness;
    std::vector<double> witness_angles;
    bool degenerate = false;           // every sample coincided (constant f)
    bool optimization_warning = false; // d_n restarts disagreed
    bool bracket_inverted = false;
    double endpoint_error = 0.0;       // CapBracket: estimator error already folded into lo and hi
    std::optional<double> cross_check; // independent second estimate, when one exists
};

struct FunctionalOptions {
    int m = 4096;           // boundary samples
    int n = 4;              // order for NDiam / CapBracket
    int restarts = 8;
    std::uint64_t seed = 0;
    int resolution = 1024;  // scan rows for Area, grid size for the raster
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline void check_radius(double r, const char* who) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": r must lie in (0, 1)");
}

inline cplx at_angle(const FunctionSpec& spec, double r, double theta) {
    return eval_unchecked(spec, std::polar(r, theta));
}

// Radii up to 1 are allowed for specs analytic on the closed disk.
inline void check_internal_radius(const FunctionSpec& spec, double r) {
    const bool ok = r > 0.0 && (r < 1.0 || (r == 1.0 && spec.analytic_on_closed_disk()));
    if (!ok) throw DomainError("radius outside the region where the spec is analytic");
}

inline std::vector<cplx> circle_values(const FunctionSpec& spec, double r, int m) {
    std::vector<cplx> v(m);
    for (int k = 0; k < m; ++k) v[k] = at_angle(spec, r, 2.0 * kPi * k / m);
    return v;
}

struct GoldenResult {
    double x;
    double fx;
    double last_change; // |f| change over the final bracket
};

// Golden-section search for a maximum of g on [a, b].
template <class G>
GoldenResult golden_max(G&& g, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    const double stop = 1e-14 * std::max(1.0, std::abs(a) + std::abs(b));
    while (b - a > stop) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = g(x1);
        }
    }
    return f1 >= f2 ? GoldenResult{x1, f1, std::abs(f1 - f2)} : GoldenResult{x2, f2, std::abs(f1 - f2)};
}

inline double max_abs(const std::vector<cplx>& v) {
    double s = 0.0;
    for (auto w : v) s = std::max(s, std::abs(w));
    return s;
}

// Rounding floor for a quantity of size `value` computed from points of size
// `scale`.
inline double rounding_floor(double value, double scale) { return 64.0 * kEps * (value + scale); }

struct CircleSup {
    double value = 0.0;
    double theta = 0.0;
    double change = 0.0; // size of the last refinement step
};

// max over |z| = r of g(z) >= 0: m equally spaced samples, then golden-section
// refinement of the four largest local maxima.
template <class G>
CircleSup circle_sup(G&& g, double r, int m) {
    std::vector<double> v(m);
    for (int k = 0; k < m; ++k) v[k] = g(std::polar(r, 2.0 * kPi * k / m));
    std::vector<int> peaks;
    for (int k = 0; k < m; ++k)
        if (v[k] >= v[(k + m - 1) % m] && v[k] >= v[(k + 1) % m]) peaks.push_back(k);
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return v[a] > v[b] || (v[a] == v[b] && a < b); });
    if (peaks.size() > 4) peaks.resize(4);

    const double step = 2.0 * kPi / m;
    CircleSup out;
    out.value = -1.0;
    for (int k : peaks) {
        auto res = golden_max([&](double t) { return g(std::polar(r, t)); }, step * k - step, step * k + step);
        if (res.fx > out.value) out = {res.fx, res.x, res.last_change};
    }
    out.value = std::max(out.value, 0.0);
    return out;
}

inline FunctionalValue radius_impl(const FunctionSpec& spec, double r, int m) {
    check_internal_radius(spec, r);
    const cplx f0 = eval_unchecked(spec, 0.0);
    double scale = std::abs(f0);
    const auto sup = circle_sup(
        [&](cplx z) {
            const cplx w = eval_unchecked(spec, z);
            scale = std::max(scale, std::abs(w));
            return std::abs(w - f0);
        },
        r, m);

    FunctionalValue out;
    out.kind = Functional::Rad;
    out.value = sup.value;
    out.lo = out.hi = out.value;
    out.abs_error = sup.change + rounding_floor(out.value, scale);
    out.witness = {at_angle(spec, r, sup.theta)};
    out.witness_angles = {sup.theta};
    out.degenerate = out.value == 0.0;
    return out;
}

inline FunctionalValue diameter_impl(const FunctionSpec& spec, double r, int m) {
    check_internal_radius(spec, r);
    const auto vals = circle_values(spec, r, m);
    const auto hull = geometry::convex_hull(vals);
    auto pairs = geometry::antipodal_pairs(vals, hull);

    FunctionalValue out;
    out.kind = Functional::Diam;
    const double scale = max_abs(vals);
    if (pairs.empty() || pairs.front().distance == 0.0) {
        out.degenerate = true;
        out.witness = {vals[0], vals[0]};
        out.witness_angles = {0.0, 0.0};
        out.abs_error = rounding_floor(0.0, scale);
        return out;
    }
    if (pairs.size() > 4) pairs.resize(4);

    const double step = 2.0 * kPi / m;
    double best = -1.0, ta_best = 0.0, tb_best = 0.0, change = 0.0;
    for (const auto& p : pairs) {
        double ta = step * p.first, tb = step * p.second;
        double cur = p.distance, last = 0.0;
        for (int round = 0; round < 30; ++round) {
            const cplx wb = at_angle(spec, r, tb);
            auto ra = golden_max([&](double t) { return std::abs(at_angle(spec, r, t) - wb); }, ta - step, ta + step);
            ta = ra.x;
            const cplx wa = at_angle(spec, r, ta);
            auto rb = golden_max([&](double t) { return std::abs(at_angle(spec, r, t) - wa); }, tb - step, tb + step);
            tb = rb.x;
            last = std::max(rb.fx - cur, 0.0) + rb.last_change;
            cur = std::max(cur, rb.fx);
            if (last <= 4.0 * kEps * cur) break;
        }
        if (cur > best) {
            best = cur;
            ta_best = ta;
            tb_best = tb;
            change = last;
        }
    }
    out.value = best;
    out.lo = out.hi = best;
    out.abs_error = change + rounding_floor(best, scale);
    out.witness = {at_angle(spec, r, ta_best), at_angle(spec, r, tb_best)};
    out.witness_angles = {ta_best, tb_best};
    return out;
}

inline double log_energy(const std::vector<cplx>& z) {
    double s = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t k = j + 1; k < z.size(); ++k) s += std::log(std::abs(z[j] - z[k]));
    return s;
}

struct TupleResult {
    std::vector<double> angles;
    std::vector<cplx> points;
    double energy = -std::numeric_limits<double>::infinity();
    double energy_error = 0.0;
};

// Discrete exchange over the sample set, then coordinate-wise golden-section
// refinement of the angles.
inline TupleResult optimize_tuple(const FunctionSpec& spec, double r, const std::vector<cplx>& vals, int n,
                                  std::vector<int> idx) {
    const int m = static_cast<int>(vals.size());
    std::vector<char> in_tuple(m, 0);
    std::vector<int> zero_hits(m, 0); // tuple members coinciding with sample s
    std::vector<double> pot(m, 0.0);  // sum of finite log distances to the tuple
    auto add_member = [&](int i, double sign) {
        for (int s = 0; s < m; ++s) {
            const double d = std::abs(vals[s] - vals[i]);
            if (d == 0.0)
                zero_hits[s] += sign > 0 ? 1 : -1;
            else
                pot[s] += sign * std::log(d);
        }
    };
    for (int i : idx) {
        in_tuple[i] = 1;
        add_member(i, 1.0);
    }

    for (int sweep = 0; sweep < 200; ++sweep) {
        bool moved = false;
        for (int j = 0; j < n; ++j) {
            const int old = idx[j];
            auto score_without_old = [&](int s) {
                const double d = std::abs(vals[s] - vals[old]);
                const int zeros = zero_hits[s] - (d == 0.0 ? 1 : 0);
                if (zeros > 0) return -std::numeric_limits<double>::infinity();
                return pot[s] - (d == 0.0 ? 0.0 : std::log(d));
            };
            const double current = score_without_old(old);
            double best = current;
            int best_s = old;
            for (int s = 0; s < m; ++s) {
                if (in_tuple[s]) continue;
                const double sc = score_without_old(s);
                if (sc > best + 1e-13 * std::max(1.0, std::abs(best))) {
                    best = sc;
                    best_s = s;
                }
            }
            if (best_s != old) {
                add_member(old, -1.0);
                in_tuple[old] = 0;
                add_member(best_s, 1.0);
                in_tuple[best_s] = 1;
                idx[j] = best_s;
                moved = true;
            }
        }
        if (!moved) break;
    }

    TupleResult res;
    const double step = 2.0 * kPi / m;
    res.angles.resize(n);
    res.points.resize(n);
    for (int j = 0; j < n; ++j) {
        res.angles[j] = step * idx[j];
        res.points[j] = vals[idx[j]];
    }
    double energy = log_energy(res.points);
    if (!std::isfinite(energy)) {
        res.energy = energy;
        return res;
    }

    double prev_gain = 0.0, gain = 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        const double before = energy;
        for (int j = 0; j < n; ++j) {
            auto partial = [&](double t) {
                const cplx w = at_angle(spec, r, t);
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    if (k != j) s += std::log(std::abs(w - res.points[k]));
                return s;
            };
            const double cur = partial(res.angles[j]);
            auto g = golden_max(partial, res.angles[j] - 2.0 * step, res.angles[j] + 2.0 * step);
            if (g.fx > cur) {
                res.angles[j] = g.x;
                res.points[j] = at_angle(spec, r, g.x);
            }
        }
        energy = log_energy(res.points);
        prev_gain = gain;
        gain = std::max(energy - before, 0.0);
        if (gain <= 1e-15 * std::max(1.0, std::abs(energy))) break;
    }
    // Remaining gain of a linearly convergent ascent, from the observed ratio.
    double ratio = prev_gain > 0.0 ? std::min(gain / prev_gain, 0.9) : 0.5;
    res.energy = energy;
    res.energy_error = gain / (1.0 - ratio) + 1e-15 * n * n * std::max(1.0, std::abs(energy));
    return res;
}

inline FunctionalValue n_diameter_impl(const FunctionSpec& spec, double r, int n, int m, int restarts,
                                       std::uint64_t seed) {
    if (n < 2) throw DomainError("n_diameter: n must be >= 2");
    if (n > m / 4) throw DomainError("n_diameter: n must be <= m / 4");
    if (restarts < 1) throw DomainError("n_diameter: restarts must be >= 1");
    if (n == 2) {
        auto d = diameter_impl(spec, r, m);
        d.kind = Functional::NDiam;
        d.n = 2;
        return d;
    }
    check_internal_radius(spec, r);
    const auto vals = circle_values(spec, r, m);
    const double scale = max_abs(vals);
    const double pairs = 0.5 * n * (n - 1);

    std::vector<TupleResult> results;
    for (int s = 0; s < restarts; ++s) {
        std::vector<int> idx(n);
        if (s == 0 || s == 1) {
            const double off = s == 0 ? 0.0 : 0.5 * m / n;
            for (int j = 0; j < n; ++j) idx[j] = static_cast<int>(std::floor(off + static_cast<double>(j) * m / n)) % m;
        } else {
            std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(s));
            std::vector<int> all(m);
            for (int k = 0; k < m; ++k) all[k] = k;
            for (int j = 0; j < n; ++j) {
                std::uniform_int_distribution<int> pick(j, m - 1);
                std::swap(all[j], all[pick(rng)]);
                idx[j] = all[j];
            }
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        for (int k = 0; static_cast<int>(idx.size()) < n; ++k)
            if (!std::binary_search(idx.begin(), idx.end(), k)) idx.insert(std::lower_bound(idx.begin(), idx.end(), k), k);
        results.push_back(optimize_tuple(spec, r, vals, n, idx));
    }

    std::size_t best = 0;
    for (std::size_t s = 1; s < results.size(); ++s)
        if (results[s].energy > results[best].energy) best = s;

    FunctionalValue out;
    out.kind = Functional::NDiam;
    out.n = n;
    const auto& b = results[best];
    out.witness = b.points;
    out.witness_angles = b.angles;
    if (!std::isfinite(b.energy)) {
        out.degenerate = true;
        out.abs_error = rounding_floor(0.0, scale);
        return out;
    }
    out.value = std::exp(b.energy / pairs);
    out.lo = out.hi = out.value;
    out.abs_error = out.value * (b.energy_error / pairs) + rounding_floor(out.value, scale);
    for (const auto& t : results) {
        const double v = std::isfinite(t.energy) ? std::exp(t.energy / pairs) : 0.0;
        if (out.value - v > out.abs_error) out.optimization_warning = true;
    }
    return out;
}

// Closed polyline approximating f(r T): uniform angles refined wherever the
// image of an interval midpoint strays from its chord.
struct Polyline {
    std::vector<double> angles;
    std::vector<cplx> points;
    double sag_tol = 0.0;
};

inline Polyline trace_boundary(const FunctionSpec& spec, double r, int m0, double rel_tol = 1e-7) {
    check_internal_radius(spec, r);
    const auto base = circle_values(spec, r, m0);
    double xmin = base[0].real(), xmax = xmin, ymin = base[0].imag(), ymax = ymin;
    for (auto w : base) {
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, w.imag());
        ymax = std::max(ymax, w.imag());
    }
    const double scale = std::max(xmax - xmin, ymax - ymin);
    Polyline out;
    out.sag_tol = rel_tol * scale;
    const double max_chord = 0.02 * scale;

    struct Item {
        double ta, tb;
        cplx wa, wb;
        int depth;
    };
    std::vector<Item> stack;
    for (int k = 0; k < m0; ++k) {
        out.angles.push_back(2.0 * kPi * k / m0);
        out.points.push_back(base[k]);
        stack.push_back({2.0 * kPi * k / m0, 2.0 * kPi * (k + 1) / m0, base[k], base[(k + 1) % m0], 0});
        // Depth-first, emitting interior points in angular order.
        std::vector<std::pair<double, cplx>> emitted;
        while (!stack.empty()) {
            auto it = stack.back();
            stack.pop_back();
            const double tm = 0.5 * (it.ta + it.tb);
            const cplx wm = at_angle(spec, r, tm);
            const double dev = geometry::point_segment_distance(wm, it.wa, it.wb);
            const bool split = it.depth < 24 && (dev > out.sag_tol || std::abs(it.wb - it.wa) > max_chord);
            if (!split) continue;
            emitted.push_back({tm, wm});
            stack.push_back({tm, it.tb, wm, it.wb, it.depth + 1});
            stack.push_back({it.ta, tm, it.wa, wm, it.depth + 1});
        }
        std::sort(emitted.begin(), emitted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [t, w] : emitted) {
            out.angles.push_back(t);
            out.points.push_back(w);
        }
    }
    return out;
}

inline double polyline_length(const std::vector<cplx>& p) {
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += std::abs(p[(k + 1) % p.size()] - p[k]);
    return s;
}

// Area of the image set counted once. The Green integral gives the area
// counted with multiplicity; the part covered more than once is measured on
// the traced boundary polygon, whose winding number is the multiplicity.
inline FunctionalValue area_impl(const FunctionSpec& spec, double r, int rows) {
    check_internal_radius(spec, r);
    if (rows < 4) throw DomainError("area: resolution must be >= 4");
    const cplx f0 = eval_unchecked(spec, 0.0);
    const auto poly = trace_boundary(spec, r, 1024);
    double scale = 0.0;
    for (auto w : poly.points) scale = std::max(scale, std::abs(w - f0));

    FunctionalValue out;
    out.kind = Functional::Area;
    if (scale == 0.0) {
        out.degenerate = true;
        return out;
    }

    auto green = [&](double t) {
        const cplx z = std::polar(r, t);
        return 0.5 * (std::conj(eval_unchecked(spec, z) - f0) * derivative_unchecked(spec, z) * z).real();
    };
    std::vector<double> bp(65);
    for (int k = 0; k <= 64; ++k) bp[k] = 2.0 * kPi * k / 64;
    QuadratureOptions qo;
    qo.abs_tol = 1e-13 * scale * scale;
    qo.max_intervals = 400000;
    const auto g = integrate(green, std::span<const double>(bp), qo);

    const auto fine = geometry::winding_measure(poly.points, rows);
    double excess = 0.0, excess_err = 0.0;
    if (fine.max_winding > 1) {
        // The scanline excess is noisy in the row count (horizontal tangents
        // land between rows), so average staggered counts and take the spread.
        // Its bias shrinks like rows^-1.5; the half-count value bounds it.
        const double half = geometry::winding_measure(poly.points, std::max(rows / 2, 2)).excess_area;
        double lo = fine.excess_area, hi = lo, sum = lo;
        for (int k = 1; k < 4; ++k) {
            const double e = geometry::winding_measure(poly.points, rows * (8 + k) / 8).excess_area;
            lo = std::min(lo, e);
            hi = std::max(hi, e);
            sum += e;
        }
        excess = 0.25 * sum;
        excess_err = 2.0 * (hi - lo) + std::abs(fine.excess_area - half) + poly.sag_tol * polyline_length(poly.points);
    }
    out.value = std::max(g.value - excess, 0.0);
    out.lo = out.hi = out.value;
    out.abs_error = g.abs_error + excess_err + 1e-13 * scale * scale;
    out.cross_check = fine.set_area;
    return out;
}

inline double quadrature_length(const FunctionSpec& spec, double r, double* err) {
    auto speed = [&](double t) { return r * std::abs(derivative_unchecked(spec, std::polar(r, t))); };
    std::vector<double> bp(65);
    for (int k = 0; k <= 64; ++k) bp[k] = 2.0 * kPi * k / 64;
    QuadratureOptions qo;
    qo.abs_tol = 1e-13 * std::max(1e-300, max_abs_derivative_bound(spec, r)) * r;
    qo.rel_tol = 1e-14;
    qo.max_intervals = 400000;
    const auto q = integrate(speed, std::span<const double>(bp), qo);
    if (err) *err = q.abs_error;
    return q.value;
}

// 2 pi r sum |b_n|^2 r^{2n}, G = sqrt(f') = sum b_n z^n. Needs f'(0) != 0
// and a geometrically converging tail; nullopt otherwise.
inline std::optional<double> length_series(const FunctionSpec& spec, double r) {
    const std::vector<cplx>* a = nullptr;
    if (auto* p = spec.as<Polynomial>()) a = &p->coeffs;
    if (auto* s = spec.as<PowerSeries>()) a = &s->coeffs;
    if (!a || a->size() < 2 || (*a)[1] == cplx(0.0)) return std::nullopt;
    std::vector<cplx> d(a->size() - 1);
    for (std::size_t k = 0; k + 1 < a->size(); ++k) d[k] = static_cast<double>(k + 1) * (*a)[k + 1];
    auto dk = [&](std::size_t k) { return k < d.size() ? d[k] : cplx(0.0); };

    std::vector<cplx> b;
    b.push_back(std::sqrt(d[0]));
    double sum = std::norm(b[0]), rp = 1.0;
    int quiet = 0;
    for (std::size_t n = 1; n < 6000; ++n) {
        cplx acc = dk(n);
        for (std::size_t k = 1; k < n; ++k) acc -= b[k] * b[n - k];
        b.push_back(acc / (2.0 * b[0]));
        rp *= r * r;
        const double term = std::norm(b[n]) * rp;
        sum += term;
        quiet = term < 1e-18 * sum ? quiet + 1 : 0;
        if (quiet >= 16) return 2.0 * kPi * r * sum;
    }
    return std::nullopt;
}

} // namespace detail

inline FunctionalValue radius(const FunctionSpec& spec, double r, int m = 4096) {
    detail::check_radius(r, "radius");
    if (m < 4) throw DomainError("radius: m must be >= 4");
    return detail::radius_impl(spec, r, m);
}

inline FunctionalValue diameter(const FunctionSpec& spec, double r, int m = 4096) {
    detail::check_radius(r, "diameter");
    if (m < 4) throw DomainError("diameter: m must be >= 4");
    return detail::diameter_impl(spec, r, m);
}

inline FunctionalValue n_diameter(const FunctionSpec& spec, double r, int n, int m = 4096, int restarts = 8,
                                  std::uint64_t seed = 0) {
    detail::check_radius(r, "n_diameter");
    return detail::n_diameter_impl(spec, r, n, m, restarts, seed);
}

inline FunctionalValue area(const FunctionSpec& spec, double r, int resolution = 1024) {
    detail::check_radius(r, "area");
    return detail::area_impl(spec, r, resolution);
}

/// pi sum n |a_n|^2 r^{2n}; the caller vouches for univalence on r D.
inline double area_univalent_series(const std::vector<cplx>& coeffs, double r) {
    double s = 0.0, rp = 1.0;
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        rp *= r * r;
        s += static_cast<double>(n) * std::norm(coeffs[n]) * rp;
    }
    return kPi * s;
}

struct UnivalenceVerdict {
    bool univalent = true;
    std::optional<std::pair<cplx, cplx>> witness; // distinct points with equal images, or a critical point twice
    explicit operator bool() const { return univalent; }
};

namespace detail {

inline UnivalenceVerdict univalence_impl(const FunctionSpec& spec, double r, int m) {
    for (double frac : {0.25, 0.5, 0.75, 1.0}) {
        const double rho = frac * r;
        const auto poly = trace_boundary(spec, rho, std::max(m, 64));
        double scale = 0.0;
        for (auto w : poly.points) scale = std::max(scale, std::abs(w - poly.points[0]));
        const double crit = 1e-10 * std::max(scale, 1e-300) / rho;
        for (std::size_t k = 0; k < poly.angles.size(); ++k) {
            const cplx z = std::polar(rho, poly.angles[k]);
            if (std::abs(derivative_unchecked(spec, z)) <= crit) return {false, std::pair{z, z}};
        }
        const auto hit = geometry::find_self_intersection(poly.points, 1e-12 * std::max(scale, 1e-300));
        if (hit) {
            const auto nv = poly.angles.size();
            auto angle_on = [&](int e, double s) {
                const double ta = poly.angles[e];
                const double tb = static_cast<std::size_t>(e) + 1 < nv ? poly.angles[e + 1] : 2.0 * kPi;
                return ta + s * (tb - ta);
            };
            return {false, std::pair{std::polar(rho, angle_on(hit->edge_a, hit->where.s)),
                                     std::polar(rho, angle_on(hit->edge_b, hit->where.t))}};
        }
    }
    return {true, std::nullopt};
}

} // namespace detail

/// Sampled injectivity test: f' must not vanish on the traced circles and the
/// boundary polygons of nested circles must be simple. A simple boundary
/// curve implies univalence inside, so `true` is a high-confidence sampled
/// claim; `false` carries a witness.
inline UnivalenceVerdict is_univalent_sampled(const FunctionSpec& spec, double r, int m = 4096) {
    detail::check_radius(r, "is_univalent_sampled");
    return detail::univalence_impl(spec, r, m);
}

inline FunctionalValue perimeter_univalent(const FunctionSpec& spec, double r, int m = 4096) {
    detail::check_radius(r, "perimeter_univalent");
    if (!is_univalent_sampled(spec, r, m))
        throw UnivalenceError("perimeter_univalent: f is not univalent on the disk of radius r");
    FunctionalValue out;
    out.kind = Functional::Perim;
    double err = 0.0;
    out.value = detail::quadrature_length(spec, r, &err);
    out.lo = out.hi = out.value;
    out.abs_error = err + detail::rounding_floor(out.value, 0.0);
    out.cross_check = detail::length_series(spec, r);
    return out;
}

/// Length of the image curve f(r T) counted with multiplicity: the boundary
/// length for univalent f, an upper bound for it otherwise.
inline FunctionalValue curve_length(const FunctionSpec& spec, double r) {
    detail::check_internal_radius(spec, r);
    FunctionalValue out;
    out.kind = Functional::Perim;
    double err = 0.0;
    out.value = detail::quadrature_length(spec, r, &err);
    out.lo = out.hi = out.value;
    out.abs_error = err + detail::rounding_floor(out.value, 0.0);
    return out;
}

namespace detail {

inline FunctionalValue capacity_impl(const FunctionSpec& spec, double r, int n, int resolution, int m, int restarts,
                                     std::uint64_t seed) {
    if (n < 4) throw DomainError("capacity_bracket: n must be >= 4");
    const auto a = area_impl(spec, r, resolution);
    const auto d = n_diameter_impl(spec, r, n, m, restarts, seed);
    FunctionalValue out;
    out.kind = Functional::CapBracket;
    out.n = n;
    out.lo = std::sqrt(std::max(a.value - a.abs_error, 0.0) / kPi);
    out.hi = (d.value + d.abs_error) / std::pow(static_cast<double>(n), 1.0 / (n - 1));
    out.endpoint_error = std::max(a.abs_error / (2.0 * kPi * std::max(out.lo, 1e-300)),
                                  d.abs_error / std::pow(static_cast<double>(n), 1.0 / (n - 1)));
    out.bracket_inverted = out.lo > out.hi;
    out.value = 0.5 * (out.lo + out.hi);
    out.abs_error = 0.5 * std::abs(out.hi - out.lo);
    out.witness = d.witness;
    out.witness_angles = d.witness_angles;
    out.optimization_warning = d.optimization_warning;
    out.degenerate = a.degenerate && d.degenerate;
    return out;
}

} // namespace detail

/// [sqrt(Area / pi), d_n / n^{1/(n-1)}]; the error of each estimate is pushed
/// outward into its endpoint.
inline FunctionalValue capacity_bracket(const FunctionSpec& spec, double r, int n, int resolution = 1024,
                                        int m = 4096, int restarts = 8, std::uint64_t seed = 0) {
    detail::check_radius(r, "capacity_bracket");
    return detail::capacity_impl(spec, r, n, resolution, m, restarts, seed);
}

/// Hit-cell rasterization of the image set: f is sampled on an adaptive polar
/// grid fine enough that every image point lies within half a cell of a
/// sample, and every grid cell containing a sample is marked.
struct Raster {
    double x0 = 0.0, y0 = 0.0, h = 0.0;
    int nx = 0, ny = 0;
    std::vector<std::uint8_t> hit;
    long long samples = 0;

    bool covered(int i, int j) const { return i >= 0 && j >= 0 && i < nx && j < ny && hit[std::size_t(j) * nx + i]; }
    std::pair<int, int> cell_of(cplx w) const {
        return {static_cast<int>(std::floor((w.real() - x0) / h)), static_cast<int>(std::floor((w.imag() - y0) / h))};
    }
    long long hit_count() const { return std::count(hit.begin(), hit.end(), std::uint8_t{1}); }
    long long boundary_count() const {
        long long c = 0;
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                if (covered(i, j) &&
                    (!covered(i - 1, j) || !covered(i + 1, j) || !covered(i, j - 1) || !covered(i, j + 1)))
                    ++c;
        return c;
    }
    /// Distance from w to the nearest uncovered cell center.
    double distance_to_uncovered(cplx w) const {
        const auto [ci, cj] = cell_of(w);
        double best = std::numeric_limits<double>::infinity();
        for (int rad = 0; rad <= std::max(nx, ny) + 1; ++rad) {
            if (rad * h > best + 2.0 * h) break;
            for (int j = cj - rad; j <= cj + rad; ++j)
                for (int i = ci - rad; i <= ci + rad; ++i) {
                    if (std::max(std::abs(i - ci), std::abs(j - cj)) != rad || covered(i, j)) continue;
                    const cplx c(x0 + (i + 0.5) * h, y0 + (j + 0.5) * h);
                    best = std::min(best, std::abs(c - w));
                }
        }
        return best;
    }
};

inline Raster rasterize(const FunctionSpec& spec, double r, int resolution = 1024,
                        long long sample_cap = 1LL << 24) {
    detail::check_internal_radius(spec, r);
    if (resolution < 4) throw DomainError("rasterize: resolution must be >= 4");
    const auto poly = detail::trace_boundary(spec, r, 1024);
    double xmin = poly.points[0].real(), xmax = xmin, ymin = poly.points[0].imag(), ymax = ymin;
    for (auto w : poly.points) {
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, w.imag());
        ymax = std::max(ymax, w.imag());
    }
    Raster g;
    const double extent = std::max(xmax - xmin, ymax - ymin);
    g.h = extent > 0.0 ? extent / resolution : 1.0;
    g.x0 = xmin - g.h;
    g.y0 = ymin - g.h;
    g.nx = static_cast<int>(std::ceil((xmax - xmin) / g.h)) + 3;
    g.ny = static_cast<int>(std::ceil((ymax - ymin) / g.h)) + 3;
    g.hit.assign(std::size_t(g.nx) * g.ny, 0);

    auto mark = [&](cplx w) {
        const auto [i, j] = g.cell_of(w);
        if (i >= 0 && j >= 0 && i < g.nx && j < g.ny) g.hit[std::size_t(j) * g.nx + i] = 1;
        if (++g.samples > sample_cap)
            throw ResourceError("rasterize: more than " + std::to_string(sample_cap) + " samples required");
    };
    if (extent == 0.0) {
        mark(poly.points[0]);
        return g;
    }

    struct Cell {
        double r0, r1, t0, t1;
    };
    std::vector<Cell> stack;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 32; ++b)
            stack.push_back({r * a / 8, r * (a + 1) / 8, 2.0 * kPi * b / 32, 2.0 * kPi * (b + 1) / 32});
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
        double lmax = 0.0, lmin = std::numeric_limits<double>::infinity();
        for (auto [rr, tt] : {std::pair{rm, tm}, {c.r0, c.t0}, {c.r0, c.t1}, {c.r1, c.t0}, {c.r1, c.t1}}) {
            const double d = std::abs(detail::derivative_unchecked(spec, std::polar(rr, tt)));
            lmax = std::max(lmax, d);
            lmin = std::min(lmin, d);
        }
        const double lip = 1.25 * lmax;
        const double radial = c.r1 - c.r0, angular = c.r1 * (c.t1 - c.t0);
        // Sub-grid whose cells have preimage diagonal <= h / lip, so each image
        // point is within h / 2 of a sub-cell center. Used once |f'| is nearly
        // constant over the cell.
        const double nr = std::ceil(lip * radial * std::sqrt(2.0) / g.h);
        const double nt = std::ceil(lip * angular * std::sqrt(2.0) / g.h);
        if (nr * nt <= 1.0 || (lmax <= 1.5 * lmin && nr * nt <= 4096.0)) {
            const int ir = std::max(1, static_cast<int>(nr)), it = std::max(1, static_cast<int>(nt));
            for (int a = 0; a < ir; ++a)
                for (int b = 0; b < it; ++b)
                    mark(detail::at_angle(spec, c.r0 + (a + 0.5) * radial / ir, c.t0 + (b + 0.5) * (c.t1 - c.t0) / it));
            continue;
        }
        const bool split_r = radial >= 0.5 * angular;
        const bool split_t = angular >= 0.5 * radial;
        if (split_r && split_t) {
            stack.push_back({c.r0, rm, c.t0, tm});
            stack.push_back({c.r0, rm, tm, c.t1});
            stack.push_back({rm, c.r1, c.t0, tm});
            stack.push_back({rm, c.r1, tm, c.t1});
        } else if (split_r) {
            stack.push_back({c.r0, rm, c.t0, c.t1});
            stack.push_back({rm, c.r1, c.t0, c.t1});
        } else {
            stack.push_back({c.r0, c.r1, c.t0, tm});
            stack.push_back({c.r0, c.r1, tm, c.t1});
        }
    }
    return g;
}

/// Area as hit-cell count times cell area; error is the boundary-cell area.
inline FunctionalValue area_raster(const FunctionSpec& spec, double r, int resolution = 1024,
                                   long long sample_cap = 1LL << 24) {
    const auto g = rasterize(spec, r, resolution, sample_cap);
    FunctionalValue out;
    out.kind = Functional::Area;
    out.value = static_cast<double>(g.hit_count()) * g.h * g.h;
    out.abs_error = static_cast<double>(g.boundary_count()) * g.h * g.h;
    out.lo = out.hi = out.value;
    return out;
}

/// Dispatch by kind at a single radius.
inline FunctionalValue compute_functional(const FunctionSpec& spec, Functional kind, double r,
                                          const FunctionalOptions& o = {}) {
    switch (kind) {
    case Functional::Rad: return radius(spec, r, o.m);
    case Functional::Diam: return diameter(spec, r, o.m);
    case Functional::NDiam: return n_diameter(spec, r, o.n, o.m, o.restarts, o.seed);
    case Functional::CapBracket: return capacity_bracket(spec, r, o.n, o.resolution, o.m, o.restarts, o.seed);
    case Functional::Area: return area(spec, r, o.resolution);
    case Functional::Perim: return perimeter_univalent(spec, r, o.m);
    }
    throw DomainError("compute_functional: unknown kind");
}

/// Sup over the open unit disk. Specs analytic on the closed disk are
/// evaluated on the unit circle itself; annulus covers are extrapolated
/// linearly from r = 0.999 and 0.998, rejecting the estimate when the two
/// differ by more than 0.5%.
inline FunctionalValue unit_disk_value(const FunctionSpec& spec, Functional kind, const FunctionalOptions& o = {}) {
    auto at = [&](double r) -> FunctionalValue {
        switch (kind) {
        case Functional::Rad: return detail::radius_impl(spec, r, o.m);
        case Functional::Diam: return detail::diameter_impl(spec, r, o.m);
        case Functional::NDiam: return detail::n_diameter_impl(spec, r, o.n, o.m, o.restarts, o.seed);
        case Functional::Area: return detail::area_impl(spec, r, o.resolution);
        case Functional::Perim: return curve_length(spec, r);
        case Functional::CapBracket:
            return detail::capacity_impl(spec, r, o.n, o.resolution, o.m, o.restarts, o.seed);
        }
        throw DomainError("unit_disk_value: unknown kind");
    };
    if (spec.analytic_on_closed_disk()) return at(1.0);
    const auto v1 = at(0.999), v2 = at(0.998);
    const double change = std::abs(v1.value - v2.value);
    if (change > 0.005 * std::abs(v1.value))
        throw NormalizationError("unit-disk " + to_string(kind) + " estimate unstable between r = 0.998 and 0.999");
    auto out = v1;
    out.value = 2.0 * v1.value - v2.value;
    out.lo = 2.0 * v1.lo - v2.lo;
    out.hi = 2.0 * v1.hi - v2.hi;
    out.abs_error = change + v1.abs_error + v2.abs_error;
    return out;
}

} // namespace schwarz
