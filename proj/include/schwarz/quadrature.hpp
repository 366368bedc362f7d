#pragma once

#include "schwarz/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <string>
#include <vector>

namespace schwarz {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_intervals = 50000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    int evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature over consecutive
/// breakpoints. The panel with the largest error estimate is bisected until
/// the summed estimate meets the tolerance. Integrable endpoint
/// singularities of square-root or logarithmic type are handled by
/// repeated bisection.
template <class F>
QuadratureResult integrate(F&& f, std::span<const double> breakpoints,
                           const QuadratureOptions& opts = {}) {
    if (breakpoints.size() < 2)
        throw QuadratureError("integrate: need at least two breakpoints");

    std::priority_queue<detail::Panel> heap;
    QuadratureResult out;
    double total = 0.0, error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] >= breakpoints[i]))
            throw QuadratureError("integrate: breakpoints must be nondecreasing");
        if (breakpoints[i + 1] == breakpoints[i]) continue;
        auto p = detail::gauss_kronrod_panel(f, breakpoints[i], breakpoints[i + 1]);
        out.evaluations += 15;
        total += p.value;
        error += p.error;
        heap.push(p);
    }

    // Panels narrower than this are at the resolution of double arithmetic.
    std::vector<detail::Panel> frozen;
    const double span_width = breakpoints.back() - breakpoints.front();
    const double min_width = 64.0 * 2.2e-16 * std::max(1.0, std::abs(breakpoints.back()) +
                                                                std::abs(breakpoints.front()));

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (!heap.empty() && error > target()) {
        if (static_cast<int>(heap.size() + frozen.size()) >= opts.max_intervals) {
            throw QuadratureError("integrate: interval cap reached with error estimate " +
                                  std::to_string(error) + " over width " +
                                  std::to_string(span_width));
        }
        auto worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < min_width) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_panel(f, worst.a, mid);
        auto right = detail::gauss_kronrod_panel(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from scratch; the running sums drift.
    out.value = 0.0;
    out.abs_error = 0.0;
    out.intervals = static_cast<int>(heap.size() + frozen.size());
    while (!heap.empty()) {
        out.value += heap.top().value;
        out.abs_error += heap.top().error;
        heap.pop();
    }
    for (const auto& p : frozen) {
        out.value += p.value;
        out.abs_error += p.error;
    }
    if (out.abs_error > target() && !frozen.empty()) {
        throw QuadratureError("integrate: error estimate " + std::to_string(out.abs_error) +
                              " stuck above tolerance at roundoff-width panels");
    }
    return out;
}

template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
    const std::array<double, 2> pts = {a, b};
    return integrate(f, std::span<const double>(pts), opts);
}

} // namespace schwarz
