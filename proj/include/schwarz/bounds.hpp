#pragma once

// Sharp inequalities instantiated on concrete maps, with equality detection.
//
// Checkers produce lhs <= rhs with slack = rhs - lhs (relation "<="), or
// lhs >= rhs with slack = lhs - rhs (relation ">="). The absolute
// tolerance is tol * max(|lhs|, |rhs|) plus three times the numerical error
// of the two sides; a report passes when slack >= -tolerance and flags
// equality when |slack| <= tolerance.

#include "schwarz/analytic.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/format.hpp"
#include "schwarz/functionals.hpp"
#include "schwarz/growth.hpp"
#include "schwarz/spec_io.hpp"

#include "json.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace schwarz {

enum class Inequality {
    SchwarzGrowth,
    LandauToeplitz,
    NDiamGrowth,
    CapGrowth,
    AreaGrowth,
    PerimGrowth,
    Don,
    Poukka,
    Schur,
    Isoperimetric,
    Polya,
    AreaDn,
    DensityLowerBound,
    Hadamard,
};

inline std::string to_string(Inequality k) {
    switch (k) {
    case Inequality::SchwarzGrowth: return "SchwarzGrowth";
    case Inequality::LandauToeplitz: return "LandauToeplitz";
    case Inequality::NDiamGrowth: return "NDiamGrowth";
    case Inequality::CapGrowth: return "CapGrowth";
    case Inequality::AreaGrowth: return "AreaGrowth";
    case Inequality::PerimGrowth: return "PerimGrowth";
    case Inequality::Don: return "Don";
    case Inequality::Poukka: return "Poukka";
    case Inequality::Schur: return "Schur";
    case Inequality::Isoperimetric: return "Isoperimetric";
    case Inequality::Polya: return "Polya";
    case Inequality::AreaDn: return "AreaDn";
    case Inequality::DensityLowerBound: return "DensityLowerBound";
    case Inequality::Hadamard: return "Hadamard";
    }
    return "?";
}

struct InequalityReport {
    Inequality name = Inequality::SchwarzGrowth;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool equality = false;
    bool pass = true;
    double tol = 0.0; // absolute tolerance actually applied
    std::string relation = "<=";
    nlohmann::json context = nlohmann::json::object();
};

inline InequalityReport make_report(Inequality name, double lhs, double rhs, double tol, double numerical_error,
                                    nlohmann::json context = nlohmann::json::object()) {
    InequalityReport r;
    r.name = name;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tol = tol * std::max(std::abs(lhs), std::abs(rhs)) + 3.0 * numerical_error;
    r.pass = r.slack >= -r.tol;
    r.equality = std::abs(r.slack) <= r.tol;
    r.context = std::move(context);
    return r;
}

inline InequalityReport make_report_ge(Inequality name, double lhs, double rhs, double tol, double numerical_error,
                                       nlohmann::json context = nlohmann::json::object()) {
    auto r = make_report(name, rhs, lhs, tol, numerical_error, std::move(context));
    std::swap(r.lhs, r.rhs);
    r.relation = ">=";
    return r;
}

inline nlohmann::json to_json(const InequalityReport& r) {
    return {{"name", to_string(r.name)}, {"lhs", r.lhs},   {"rhs", r.rhs},         {"slack", r.slack},
            {"equality", r.equality},    {"pass", r.pass}, {"tol", r.tol},         {"relation", r.relation},
            {"context", r.context}};
}

/// One JSON object per line, numbers at 17 significant digits.
inline std::string to_json_line(const InequalityReport& r) {
    std::string s = "{\"name\":\"" + to_string(r.name) + "\",\"lhs\":" + fmt17(r.lhs) + ",\"rhs\":" + fmt17(r.rhs) +
                    ",\"slack\":" + fmt17(r.slack) + ",\"equality\":" + (r.equality ? "true" : "false") +
                    ",\"pass\":" + (r.pass ? "true" : "false") + ",\"tol\":" + fmt17(r.tol) + ",\"relation\":\"" + r.relation + "\"" +
                    ",\"context\":" + r.context.dump() + "}";
    return s;
}

/// F(D) for the unit disk itself.
inline double disk_value(Functional kind, int n) { return normalization(kind, n, 1.0); }

inline Inequality growth_inequality(Functional kind) {
    switch (kind) {
    case Functional::Rad: return Inequality::SchwarzGrowth;
    case Functional::Diam: return Inequality::LandauToeplitz;
    case Functional::NDiam: return Inequality::NDiamGrowth;
    case Functional::CapBracket: return Inequality::CapGrowth;
    case Functional::Area: return Inequality::AreaGrowth;
    case Functional::Perim: return Inequality::PerimGrowth;
    }
    return Inequality::SchwarzGrowth;
}

namespace detail {

// The estimate used for a unit-disk normalization: the bracket's upper
// endpoint for capacity, the value otherwise.
inline double normalizing_value(const FunctionalValue& v) {
    return v.kind == Functional::CapBracket ? v.hi : v.value;
}

inline double normalizing_error(const FunctionalValue& v) {
    return v.kind == Functional::CapBracket ? v.endpoint_error : v.abs_error;
}

} // namespace detail

/// Rescales f so that the unit-disk functional equals the disk's.
inline FunctionSpec normalize(const FunctionSpec& spec, Functional kind, const FunctionalOptions& opts = {}) {
    const auto u = unit_disk_value(spec, kind, opts);
    const double value = detail::normalizing_value(u);
    if (!(value > 0.0)) throw NormalizationError("normalize: the unit-disk " + to_string(kind) + " vanishes");
    const double ratio = disk_value(kind, opts.n) / value;
    return scaled(spec, kind == Functional::Area ? std::sqrt(ratio) : ratio);
}

/// F(f(r D)) <= F(r D) for f normalized so that F(f(D)) = F(D).
inline InequalityReport check_growth(const FunctionSpec& spec, double r, Functional kind, double tol = 1e-6,
                                     const FunctionalOptions& opts = {}) {
    detail::check_radius(r, "check_growth");
    const auto u = unit_disk_value(spec, kind, opts);
    const double target = disk_value(kind, opts.n);
    const double unit = detail::normalizing_value(u);
    if (std::abs(unit - target) > 0.01 * target)
        throw NormalizationError("check_growth: unit-disk " + to_string(kind) + " is " + fmt17(unit) +
                                 ", expected " + fmt17(target) + " within 1%");
    const auto v = compute_functional(spec, kind, r, opts);
    nlohmann::json ctx = {{"spec", to_json(spec)}, {"r", r}, {"kind", to_string(kind)}, {"unit_disk_value", unit}};
    if (kind == Functional::NDiam || kind == Functional::CapBracket) ctx["n"] = opts.n;
    return make_report(growth_inequality(kind), detail::normalizing_value(v), normalization(kind, opts.n, r), tol,
                       detail::normalizing_error(v), std::move(ctx));
}

/// |f(z) - f(0)| <= 2|z| / (1 + sqrt(1 - |z|^2)) when Diam f(D) <= 2.
inline InequalityReport check_don(const FunctionSpec& spec, cplx z, double tol = 1e-6,
                                  const FunctionalOptions& opts = {}) {
    detail::check_disk(z, "check_don");
    const auto d = unit_disk_value(spec, Functional::Diam, opts);
    if (d.value > 2.0 * (1.0 + tol) + 3.0 * d.abs_error)
        throw NormalizationError("check_don: Diam f(D) = " + fmt17(d.value) + " exceeds 2");
    const cplx fz = evaluate(spec, z), f0 = evaluate(spec, 0.0);
    const double lhs = std::abs(fz - f0);
    const double az = std::abs(z);
    const double rhs = 2.0 * az / (1.0 + std::sqrt(1.0 - az * az));
    const double err = 8.0 * detail::kEps * (std::abs(fz) + std::abs(f0) + rhs);
    return make_report(Inequality::Don, lhs, rhs, tol, err,
                       {{"spec", to_json(spec)}, {"z", {z.real(), z.imag()}}, {"diam_unit", d.value}});
}

/// |f(z) - f(w)| <= Diam f(D) tanh(h(z, w) / 2), with the two closed forms of
/// the right side cross-checked.
inline InequalityReport check_don_symmetric(const FunctionSpec& spec, cplx z, cplx w, double tol = 1e-6,
                                            const FunctionalOptions& opts = {}) {
    detail::check_disk(z, "check_don_symmetric");
    detail::check_disk(w, "check_don_symmetric");
    const auto d = unit_disk_value(spec, Functional::Diam, opts);
    const double delta = std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
    const double rhs = d.value * delta / (1.0 + std::sqrt(1.0 - delta * delta));
    const double rhs2 = d.value * std::abs(z - w) /
                        (std::abs(1.0 - std::conj(w) * z) + std::sqrt((1.0 - std::norm(z)) * (1.0 - std::norm(w))));
    const bool forms_agree = std::abs(rhs - rhs2) <= 1e-12 * std::max(1.0, std::abs(rhs));
    const cplx fz = evaluate(spec, z), fw = evaluate(spec, w);
    const double lhs = std::abs(fz - fw);
    const double err = d.abs_error * (d.value > 0.0 ? rhs / d.value : 0.0) +
                       8.0 * detail::kEps * (std::abs(fz) + std::abs(fw) + rhs);
    auto rep = make_report(Inequality::Don, lhs, rhs, tol, err,
                           {{"spec", to_json(spec)},
                            {"z", {z.real(), z.imag()}},
                            {"w", {w.real(), w.imag()}},
                            {"diam_unit", d.value},
                            {"rhs_second_form", rhs2},
                            {"forms_agree", forms_agree}});
    rep.pass = rep.pass && forms_agree;
    return rep;
}

/// |f^(n)(0)| / n! <= Diam f(D) / 2.
inline InequalityReport check_poukka(const FunctionSpec& spec, int n, double tol = 1e-6,
                                     const FunctionalOptions& opts = {}) {
    if (n < 1) throw DomainError("check_poukka: n must be >= 1");
    const auto coeffs = taylor_coefficients(spec, n);
    const double lhs = std::abs(coeffs[n]);
    const auto d = unit_disk_value(spec, Functional::Diam, opts);
    const double rhs = 0.5 * d.value;
    return make_report(Inequality::Poukka, lhs, rhs, tol, 0.5 * d.abs_error + 8.0 * detail::kEps * lhs,
                       {{"spec", to_json(spec)}, {"n", n}, {"diam_unit", d.value}});
}

/// max_{|z|=r} |f(z) - f(0) - f'(0) z| <= (1 - |f'(0)|^2) r^2 / (1 - |f'(0)| r)
/// for f with sup_D |(f(z) - f(0)) / z| <= 1.
inline InequalityReport check_schur(const FunctionSpec& spec, double r, double tol = 1e-6,
                                    const FunctionalOptions& opts = {}) {
    detail::check_radius(r, "check_schur");
    // sup |g| over the unit circle is Rad f(D).
    const auto g = unit_disk_value(spec, Functional::Rad, opts);
    if (g.value > 1.0 + tol + 3.0 * g.abs_error)
        throw NormalizationError("check_schur: sup |(f(z) - f(0)) / z| = " + fmt17(g.value) + " exceeds 1");
    const cplx f0 = evaluate(spec, 0.0);
    const cplx a = derivative(spec, 0.0);
    double scale = std::abs(f0);
    const auto sup = detail::circle_sup(
        [&](cplx z) {
            const cplx fz = detail::eval_unchecked(spec, z);
            scale = std::max(scale, std::abs(fz));
            return std::abs(fz - f0 - a * z);
        },
        r, opts.m);
    const double aa = std::abs(a);
    const double rhs = (1.0 - aa * aa) * r * r / (1.0 - aa * r);
    const double err = sup.change + 16.0 * detail::kEps * (scale + aa * r + rhs);
    return make_report(Inequality::Schur, sup.value, rhs, tol, err,
                       {{"spec", to_json(spec)}, {"r", r}, {"fprime0", aa}, {"sup_g_unit", g.value}});
}

/// 4 pi Area <= Length^2.
inline InequalityReport check_isoperimetric(double area_value, double length, double tol = 1e-6,
                                            double area_error = 0.0, double length_error = 0.0) {
    if (area_value < 0.0 || length < 0.0) throw DomainError("check_isoperimetric: inputs must be nonnegative");
    return make_report(Inequality::Isoperimetric, 4.0 * kPi * area_value, length * length, tol,
                       4.0 * kPi * area_error + 2.0 * length * length_error,
                       {{"area", area_value}, {"length", length}});
}

/// Area <= pi Cap^2 (with the bracket's upper endpoint) and
/// Area <= pi d_n^2 / n^{2/(n-1)}.
inline std::vector<InequalityReport> check_polya_chain(const FunctionSpec& spec, double r, int n, double tol = 1e-6,
                                                       const FunctionalOptions& opts = {}) {
    detail::check_radius(r, "check_polya_chain");
    if (n < 2) throw DomainError("check_polya_chain: n must be >= 2");
    const auto a = area(spec, r, opts.resolution);
    const int n_cap = std::max(n, 8);
    const auto cap = capacity_bracket(spec, r, n_cap, opts.resolution, opts.m, opts.restarts, opts.seed);
    const auto d = n_diameter(spec, r, n, opts.m, opts.restarts, opts.seed);
    const double pn = std::pow(static_cast<double>(n), 2.0 / (n - 1));

    const nlohmann::json base = {{"spec", to_json(spec)}, {"r", r}};
    auto polya_ctx = base;
    polya_ctx["n_cap"] = n_cap;
    polya_ctx["cap_lo"] = cap.lo;
    polya_ctx["cap_hi"] = cap.hi;
    auto dn_ctx = base;
    dn_ctx["n"] = n;
    dn_ctx["d_n"] = d.value;

    std::vector<InequalityReport> out;
    out.push_back(make_report(Inequality::Polya, a.value, kPi * cap.hi * cap.hi, tol,
                              a.abs_error + 2.0 * kPi * cap.hi * cap.endpoint_error, polya_ctx));
    out.push_back(make_report(Inequality::AreaDn, a.value, kPi * d.value * d.value / pn, tol,
                              a.abs_error + 2.0 * kPi * d.value * d.abs_error / pn, dn_ctx));
    return out;
}

} // namespace schwarz
