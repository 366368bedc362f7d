#pragma once

// Seeded generators and small oracles shared by the unit suites and the
// acceptance runner.

#include "schwarz/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace testsupport {

using schwarz::cplx;
using schwarz::FunctionSpec;

/// |x - target| <= tol, with a few ulps of slack for the comparison itself.
inline bool within(double x, double target, double tol) {
    return std::abs(x - target) <= tol + 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x), std::abs(target));
}

/// Degree-`degree` polynomial with coefficients uniform in [-1, 1]^2.
inline FunctionSpec random_polynomial(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> c(degree + 1);
    for (auto& a : c) a = {u(rng), u(rng)};
    return FunctionSpec::polynomial(c);
}

/// f = z + sum_{n>=2} a_n z^n with sum n|a_n| <= budget < 1, so Re f' > 0 on
/// the disk and f is univalent there.
inline FunctionSpec random_univalent_polynomial(std::mt19937_64& rng, int degree, double budget = 0.9) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> c(degree + 1, 0.0);
    c[0] = {2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0};
    c[1] = 1.0;
    std::vector<double> w(degree + 1, 0.0);
    double total = 0.0;
    for (int n = 2; n <= degree; ++n) total += (w[n] = u(rng));
    for (int n = 2; n <= degree; ++n)
        c[n] = std::polar(budget * w[n] / total / n, 2.0 * schwarz::kPi * u(rng));
    return FunctionSpec::polynomial(c);
}

/// All-pairs diameter of a point set.
inline double brute_diameter(const std::vector<cplx>& p) {
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) d = std::max(d, std::abs(p[i] - p[j]));
    return d;
}

/// f(r e^{2 pi i k / m}) for k < m, through the public evaluator.
inline std::vector<cplx> circle(const FunctionSpec& f, double r, int m) {
    std::vector<cplx> v(m);
    for (int k = 0; k < m; ++k) v[k] = schwarz::evaluate(f, std::polar(r, 2.0 * schwarz::kPi * k / m));
    return v;
}

} // namespace testsupport
