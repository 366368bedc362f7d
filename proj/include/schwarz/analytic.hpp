#pragma once

#include "schwarz/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace schwarz {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Points strictly inside this radius are accepted by the checked evaluators.
inline constexpr double kDiskMargin = 1e-12;

/// f(z) = sum coeffs[k] z^k.
struct Polynomial {
    std::vector<cplx> coeffs;
};

/// A truncated Taylor series; evaluated exactly like a polynomial but kept
/// distinct so reports can say which representation was used.
struct PowerSeries {
    std::vector<cplx> coeffs;
    int truncation_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// f(z) = c (z - b) / (1 - conj(b) z) + a, with |b| < 1 and |c| = 1.
struct Moebius {
    cplx a, b, c;
};

/// f(z) = exp(i c log((1 + z) / (1 - z))), the universal cover of the annulus
/// exp(-pi c / 2) < |w| < exp(pi c / 2).
struct AnnulusCover {
    double c;
};

class FunctionSpec {
public:
    using Payload = std::variant<Polynomial, PowerSeries, Moebius, AnnulusCover>;

    static FunctionSpec polynomial(std::vector<cplx> coeffs) {
        if (coeffs.empty()) coeffs.push_back(0.0);
        return FunctionSpec(Polynomial{std::move(coeffs)});
    }

    static FunctionSpec series(std::vector<cplx> coeffs) {
        if (coeffs.empty()) coeffs.push_back(0.0);
        return FunctionSpec(PowerSeries{std::move(coeffs)});
    }

    static FunctionSpec moebius(cplx a, cplx b, cplx c) {
        if (!(std::abs(b) < 1.0))
            throw DomainError("moebius: |b| must be < 1");
        if (std::abs(std::abs(c) - 1.0) > 1e-12)
            throw DomainError("moebius: |c| must equal 1");
        return FunctionSpec(Moebius{a, b, c});
    }

    static FunctionSpec annulus_cover(double c) {
        if (!(c > 0.0) || !std::isfinite(c))
            throw DomainError("annulus_cover: c must be a positive real");
        return FunctionSpec(AnnulusCover{c});
    }

    const Payload& payload() const { return payload_; }

    template <class T>
    const T* as() const { return std::get_if<T>(&payload_); }

    std::string_view kind_name() const {
        switch (payload_.index()) {
        case 0: return "polynomial";
        case 1: return "series";
        case 2: return "moebius";
        default: return "annulus_cover";
        }
    }

    /// True when f extends analytically across the unit circle, so sups over
    /// the open disk equal maxima over the closed one.
    bool analytic_on_closed_disk() const { return !std::holds_alternative<AnnulusCover>(payload_); }

    /// f(z) = a + b z (including constants).
    bool is_linear() const {
        if (auto* p = as<Polynomial>()) return coeffs_linear(p->coeffs);
        if (auto* s = as<PowerSeries>()) return coeffs_linear(s->coeffs);
        if (auto* m = as<Moebius>()) return m->b == cplx(0.0);
        return false;
    }

private:
    explicit FunctionSpec(Payload p) : payload_(std::move(p)) {}

    static bool coeffs_linear(const std::vector<cplx>& c) {
        for (std::size_t k = 2; k < c.size(); ++k)
            if (c[k] != cplx(0.0)) return false;
        return true;
    }

    Payload payload_;
};

/// Image points of the circle r T at equally spaced angles 2 pi k / m.
struct BoundarySample {
    double r = 0.0;
    std::vector<double> angles;
    std::vector<cplx> values;
};

namespace detail {

inline cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// k-th derivative of a polynomial, any z.
inline cplx horner_derivative(const std::vector<cplx>& c, cplx z, int order) {
    cplx acc = 0.0;
    for (int j = static_cast<int>(c.size()) - 1; j >= order; --j) {
        double falling = 1.0;
        for (int t = 0; t < order; ++t) falling *= static_cast<double>(j - t);
        acc = acc * z + falling * c[j];
    }
    return acc;
}

// log((1 + z) / (1 - z)) on the principal branch; the ratio has positive real
// part throughout the disk.
inline cplx annulus_log(cplx z) { return std::log((1.0 + z) / (1.0 - z)); }

/// Evaluation without the open-disk guard. Valid wherever the closed form is
/// defined: on the closed disk for every variant except AnnulusCover.
inline cplx eval_unchecked(const FunctionSpec& spec, cplx z) {
    return std::visit(
        [z](const auto& f) -> cplx {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, PowerSeries>) {
                return horner(f.coeffs, z);
            } else if constexpr (std::is_same_v<T, Moebius>) {
                return f.c * (z - f.b) / (1.0 - std::conj(f.b) * z) + f.a;
            } else {
                return std::exp(cplx(0.0, f.c) * annulus_log(z));
            }
        },
        spec.payload());
}

inline cplx derivative_unchecked(const FunctionSpec& spec, cplx z) {
    return std::visit(
        [z](const auto& f) -> cplx {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, PowerSeries>) {
                return horner_derivative(f.coeffs, z, 1);
            } else if constexpr (std::is_same_v<T, Moebius>) {
                const cplx d = 1.0 - std::conj(f.b) * z;
                return f.c * (1.0 - std::norm(f.b)) / (d * d);
            } else {
                const cplx w = std::exp(cplx(0.0, f.c) * annulus_log(z));
                return w * cplx(0.0, 2.0 * f.c) / (1.0 - z * z);
            }
        },
        spec.payload());
}

inline void check_disk(cplx z, const char* who) {
    if (!(std::abs(z) < 1.0 - kDiskMargin))
        throw DomainError(std::string(who) + ": |z| must be < 1");
}

} // namespace detail

inline cplx evaluate(const FunctionSpec& spec, cplx z) {
    detail::check_disk(z, "evaluate");
    return detail::eval_unchecked(spec, z);
}

/// Taylor coefficients a_0 .. a_degree of f at the origin.
inline std::vector<cplx> taylor_coefficients(const FunctionSpec& spec, int degree) {
    if (degree < 0) throw DomainError("taylor_coefficients: degree must be >= 0");
    std::vector<cplx> out(static_cast<std::size_t>(degree) + 1, 0.0);
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, PowerSeries>) {
                for (std::size_t k = 0; k < f.coeffs.size() && k < out.size(); ++k)
                    out[k] = f.coeffs[k];
            } else if constexpr (std::is_same_v<T, Moebius>) {
                out[0] = f.a - f.c * f.b;
                const double scale = 1.0 - std::norm(f.b);
                cplx power = 1.0;
                for (int n = 1; n <= degree; ++n) {
                    out[n] = f.c * scale * power;
                    power *= std::conj(f.b);
                }
            } else {
                // exp(g) with g(z) = 2ic artanh z; n h_n = sum_k k g_k h_{n-k}.
                std::vector<cplx> g(out.size(), 0.0);
                for (int k = 1; k <= degree; k += 2) g[k] = cplx(0.0, 2.0 * f.c / k);
                out[0] = 1.0;
                for (int n = 1; n <= degree; ++n) {
                    cplx acc = 0.0;
                    for (int k = 1; k <= n; k += 2) acc += static_cast<double>(k) * g[k] * out[n - k];
                    out[n] = acc / static_cast<double>(n);
                }
            }
        },
        spec.payload());
    return out;
}

/// f^{(order)}(z). Polynomials and series support every order at every z;
/// the closed-form variants support order > 1 only at the origin.
inline cplx derivative(const FunctionSpec& spec, cplx z, int order = 1) {
    if (order < 1) throw DomainError("derivative: order must be >= 1");
    detail::check_disk(z, "derivative");
    if (order == 1) return detail::derivative_unchecked(spec, z);
    if (auto* p = spec.as<Polynomial>()) return detail::horner_derivative(p->coeffs, z, order);
    if (auto* s = spec.as<PowerSeries>()) return detail::horner_derivative(s->coeffs, z, order);
    if (z != cplx(0.0))
        throw UnsupportedError("derivative: order > 1 away from 0 needs a polynomial or series");
    const auto coeffs = taylor_coefficients(spec, order);
    return std::tgamma(order + 1.0) * coeffs[order];
}

inline BoundarySample sample_circle(const FunctionSpec& spec, double r, int m) {
    if (!(r > 0.0 && r <= 1.0 - 1e-9)) throw DomainError("sample_circle: r must lie in (0, 1 - 1e-9]");
    if (m < 4) throw DomainError("sample_circle: m must be >= 4");
    BoundarySample out;
    out.r = r;
    out.angles.resize(m);
    out.values.resize(m);
    for (int k = 0; k < m; ++k) {
        const double theta = 2.0 * kPi * k / m;
        out.angles[k] = theta;
        out.values[k] = detail::eval_unchecked(spec, std::polar(r, theta));
    }
    return out;
}

/// An upper bound for max |f'| on the closed disk of radius r.
inline double max_abs_derivative_bound(const FunctionSpec& spec, double r) {
    return std::visit(
        [r](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, PowerSeries>) {
                double acc = 0.0, rp = 1.0;
                for (std::size_t j = 1; j < f.coeffs.size(); ++j) {
                    acc += static_cast<double>(j) * std::abs(f.coeffs[j]) * rp;
                    rp *= r;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, Moebius>) {
                const double d = 1.0 - std::abs(f.b) * r;
                return (1.0 - std::norm(f.b)) / (d * d);
            } else {
                return std::exp(kPi * f.c / 2.0) * 2.0 * f.c / (1.0 - r * r);
            }
        },
        spec.payload());
}

/// s * f. Moebius maps are re-expressed as power series when s != 1 since the
/// Moebius family is closed only under unimodular scaling.
inline FunctionSpec scaled(const FunctionSpec& spec, double s) {
    if (auto* p = spec.as<Polynomial>()) {
        auto c = p->coeffs;
        for (auto& x : c) x *= s;
        return FunctionSpec::polynomial(std::move(c));
    }
    if (auto* q = spec.as<PowerSeries>()) {
        auto c = q->coeffs;
        for (auto& x : c) x *= s;
        return FunctionSpec::series(std::move(c));
    }
    if (auto* m = spec.as<Moebius>()) {
        if (s == 1.0) return spec;
        // |b|^N (1 - |b|^2) below 1e-17 on the unit circle.
        const double rb = std::abs(m->b);
        int degree = rb == 0.0 ? 1 : static_cast<int>(std::ceil(std::log(1e-17) / std::log(rb))) + 1;
        if (degree > 4000) throw UnsupportedError("scaled: Moebius |b| too close to 1 for a series");
        auto c = taylor_coefficients(spec, std::max(degree, 1));
        for (auto& x : c) x *= s;
        return FunctionSpec::series(std::move(c));
    }
    throw UnsupportedError("scaled: annulus covers cannot be rescaled within the catalog");
}

/// f + w.
inline FunctionSpec translated(const FunctionSpec& spec, cplx w) {
    if (auto* p = spec.as<Polynomial>()) {
        auto c = p->coeffs;
        c[0] += w;
        return FunctionSpec::polynomial(std::move(c));
    }
    if (auto* q = spec.as<PowerSeries>()) {
        auto c = q->coeffs;
        c[0] += w;
        return FunctionSpec::series(std::move(c));
    }
    if (auto* m = spec.as<Moebius>()) return FunctionSpec::moebius(m->a + w, m->b, m->c);
    throw UnsupportedError("translated: annulus covers cannot be translated within the catalog");
}

} // namespace schwarz
