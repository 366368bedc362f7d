#pragma once

// Exact algebraic facts about point tuples and roots of unity: the
// Vandermonde product, the n^{n/2} bound on it, and two sums over
// alpha = exp(2 pi i / n).

#include "schwarz/analytic.hpp"
#include "schwarz/bounds.hpp"
#include "schwarz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace schwarz {

/// n distinct points of the closed unit disk.
class PointTuple {
public:
    explicit PointTuple(std::vector<cplx> points) : points_(std::move(points)) {
        if (points_.size() < 2) throw DomainError("PointTuple: need at least 2 points");
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (!std::isfinite(points_[j].real()) || !std::isfinite(points_[j].imag()))
                throw DomainError("PointTuple: non-finite point");
            if (std::abs(points_[j]) > 1.0 + 1e-12) throw DomainError("PointTuple: point outside the closed unit disk");
            for (std::size_t k = 0; k < j; ++k)
                if (std::abs(points_[j] - points_[k]) <= 1e-12) throw DomainError("PointTuple: coincident points");
        }
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<cplx>& points() const { return points_; }
    const cplx& operator[](std::size_t i) const { return points_[i]; }

    double min_gap() const {
        double g = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < points_.size(); ++j)
            for (std::size_t k = 0; k < j; ++k) g = std::min(g, std::abs(points_[j] - points_[k]));
        return g;
    }

private:
    std::vector<cplx> points_;
};

/// u alpha^j, j = 0 .. n-1, with alpha = exp(2 pi i / n).
inline std::vector<cplx> roots_of_unity(int n, double rotation = 0.0) {
    if (n < 1) throw DomainError("roots_of_unity: n must be positive");
    std::vector<cplx> w(n);
    for (int j = 0; j < n; ++j) w[j] = std::polar(1.0, rotation + 2.0 * kPi * j / n);
    return w;
}

struct VandermondeCheck {
    double product = 0.0;     // prod_{j<k} |w_k - w_j|
    double det = 0.0;         // |det V| by pivoted elimination
    double log_product = 0.0; // logs stay finite when the values do not
    double log_det = 0.0;
    double relative_difference = 0.0;
    bool match = false;
    bool conditioning_warning = false; // near-coincident points, det may be inaccurate
};

namespace detail {

// log |det A| by Gaussian elimination with partial pivoting; A is n x n,
// row-major, overwritten.
inline double log_abs_det(std::vector<cplx>& a, std::size_t n) {
    double log_det = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row * n + col]) > std::abs(a[piv * n + col])) piv = row;
        const cplx p = a[piv * n + col];
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (piv != col)
            for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
        log_det += std::log(std::abs(p));
        for (std::size_t row = col + 1; row < n; ++row) {
            const cplx m = a[row * n + col] / p;
            if (m == 0.0) continue;
            for (std::size_t k = col + 1; k < n; ++k) a[row * n + k] -= m * a[col * n + k];
        }
    }
    return log_det;
}

// Neumaier's compensated sum, applied to both components.
class CompensatedSum {
public:
    void add(cplx x) {
        add_one(re_, cre_, x.real());
        add_one(im_, cim_, x.imag());
    }
    cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_one(double& s, double& c, double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

// alpha^e with the exponent reduced mod n first, so equal residues give
// bit-identical values.
inline cplx alpha_pow(int n, std::int64_t e) {
    const std::int64_t k = ((e % n) + n) % n;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / n);
}

inline void check_index(int n, int j, const char* what) {
    if (n < 2) throw DomainError(std::string(what) + ": n must be at least 2");
    if (j < 1 || j > n) throw DomainError(std::string(what) + ": index must lie in [1, n]");
}

} // namespace detail

inline VandermondeCheck vandermonde_check(const PointTuple& t) {
    const std::size_t n = t.size();
    if (n > 64) throw DomainError("vandermonde_check: n must be at most 64");
    VandermondeCheck out;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < k; ++j) out.log_product += std::log(std::abs(t[k] - t[j]));

    std::vector<cplx> v(n * n);
    for (std::size_t row = 0; row < n; ++row) {
        cplx p = 1.0;
        for (std::size_t col = 0; col < n; ++col) {
            v[row * n + col] = p;
            p *= t[row];
        }
    }
    out.log_det = detail::log_abs_det(v, n);
    out.product = std::exp(out.log_product);
    out.det = std::exp(out.log_det);
    out.relative_difference = std::abs(std::expm1(out.log_det - out.log_product));
    out.match = out.relative_difference <= 1e-9 * static_cast<double>(n * n);
    out.conditioning_warning = t.min_gap() < 1e-6;
    return out;
}

/// |det V_n| <= n^{n/2} for points in the closed disk; equality exactly at
/// rotated roots of unity. Compared in log form to avoid overflow.
inline InequalityReport hadamard_bound_check(const PointTuple& t, double tol = 1e-9) {
    const auto v = vandermonde_check(t);
    const double n = static_cast<double>(t.size());
    const double rhs = std::pow(n, 0.5 * n);
    // rounding of the elimination, relative to |det|
    const double err = v.det * (v.relative_difference + 16.0 * n * n * detail::kEps);
    return make_report(Inequality::Hadamard, v.det, rhs, tol, err,
                       {{"n", t.size()}, {"product", v.product}, {"match", v.match},
                        {"conditioning_warning", v.conditioning_warning}});
}

struct SumCheck {
    int n = 0;
    int index = 0;
    cplx sum;
    double expected = 0.0;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// sum_{k=1}^{n-1} (1 - alpha^{jk}) / (1 - alpha^k), which equals n - j.
inline SumCheck roots_of_unity_sum(int n, int j) {
    detail::check_index(n, j, "roots_of_unity_sum");
    detail::CompensatedSum s;
    for (int k = 1; k < n; ++k)
        s.add((1.0 - detail::alpha_pow(n, static_cast<std::int64_t>(j) * k)) / (1.0 - detail::alpha_pow(n, k)));
    SumCheck out;
    out.n = n;
    out.index = j;
    out.sum = s.value();
    out.expected = n - j;
    out.residual = std::abs(out.sum - out.expected);
    out.tol = 1e-12 * n;
    out.pass = out.residual <= out.tol;
    return out;
}

/// sum_{k=1}^{n-1} (1 - alpha^{kp}) / (1 - alpha^k)^2, which equals
/// pA - (n - p/2)(p - 1) with A = (n - 1) / 2. Any integer p >= 1 is accepted;
/// only p mod n enters the sum, while the closed form is evaluated for p in [1, n].
inline SumCheck second_sum(int n, int p) {
    if (n < 2) throw DomainError("second_sum: n must be at least 2");
    if (p < 1) throw DomainError("second_sum: p must be positive");
    detail::CompensatedSum s;
    for (int k = 1; k < n; ++k) {
        const cplx d = 1.0 - detail::alpha_pow(n, k);
        s.add((1.0 - detail::alpha_pow(n, static_cast<std::int64_t>(k) * p)) / (d * d));
    }
    const int q = (p - 1) % n + 1;
    const double A = 0.5 * (n - 1);
    SumCheck out;
    out.n = n;
    out.index = p;
    out.sum = s.value();
    out.expected = q * A - (n - 0.5 * q) * (q - 1);
    out.residual = std::abs(out.sum - out.expected);
    out.tol = 1e-11 * n * n;
    out.pass = out.residual <= out.tol;
    return out;
}

struct RootsMatch {
    bool pass = false;
    double rotation = 0.0;
    double max_deviation = 0.0;
    std::vector<int> assignment; // assignment[j] = k: point j sits at u alpha^k
};

namespace detail {

inline RootsMatch match_to_roots(const std::vector<cplx>& w, double rotation) {
    const int n = static_cast<int>(w.size());
    const auto roots = roots_of_unity(n, rotation);
    struct Pair {
        double d;
        int j, k;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) pairs.push_back({std::abs(w[j] - roots[k]), j, k});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        return a.d != b.d ? a.d < b.d : (a.j != b.j ? a.j < b.j : a.k < b.k);
    });
    RootsMatch m;
    m.rotation = rotation;
    m.assignment.assign(n, -1);
    std::vector<bool> used(n, false);
    int left = n;
    for (const auto& p : pairs) {
        if (m.assignment[p.j] >= 0 || used[p.k]) continue;
        m.assignment[p.j] = p.k;
        used[p.k] = true;
        m.max_deviation = std::max(m.max_deviation, p.d);
        if (--left == 0) break;
    }
    return m;
}

} // namespace detail

/// Best alignment of w with a rotated set of n-th roots of unity: the
/// rotation is the mean argument offset arg(sum w_j^n) / n, then points are
/// matched greedily. When that sum vanishes (no preferred rotation) each
/// point's own argument is tried instead.
inline RootsMatch align_to_roots(const PointTuple& t) {
    const auto& w = t.points();
    const int n = static_cast<int>(w.size());
    cplx s = 0.0;
    for (const auto& z : w) s += std::pow(z, n);
    RootsMatch best;
    best.max_deviation = std::numeric_limits<double>::infinity();
    if (std::abs(s) > 1e-9 * n) best = detail::match_to_roots(w, std::arg(s) / n);
    if (best.max_deviation > 1e-3)
        for (const auto& z : w) {
            if (std::abs(z) == 0.0) continue;
            auto m = detail::match_to_roots(w, std::arg(z));
            if (m.max_deviation < best.max_deviation) best = std::move(m);
        }
    return best;
}

/// True iff, after rotation and relabeling, every point lies within tol of
/// an n-th root of unity.
inline bool fekete_witness_is_roots(const PointTuple& witness, double tol) {
    return align_to_roots(witness).max_deviation <= tol;
}

} // namespace schwarz
