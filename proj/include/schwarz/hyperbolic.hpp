#pragma once

// Hyperbolic density and distance on the disk, and on regions given by a
// covering map f : D -> Omega via rho_Omega(f(z)) |f'(z)| = rho_D(z).

#include "schwarz/analytic.hpp"
#include "schwarz/bounds.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/functionals.hpp"
#include "schwarz/growth.hpp"
#include "schwarz/spec_io.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace schwarz {

/// A point of Omega, represented by a preimage z in the disk under a cover.
struct HypPoint {
    cplx z;
    std::optional<FunctionSpec> cover; // empty: the point lives in D itself

    cplx image() const { return cover ? evaluate(*cover, z) : z; }
};

inline double density_disk(cplx z) {
    detail::check_disk(z, "density_disk");
    return 1.0 / (1.0 - std::norm(z));
}

inline double hyp_distance_disk(cplx z, cplx w) {
    detail::check_disk(z, "hyp_distance_disk");
    detail::check_disk(w, "hyp_distance_disk");
    return std::atanh(std::abs((z - w) / (1.0 - std::conj(w) * z)));
}

inline double density_via_cover(const FunctionSpec& spec, cplx z) {
    detail::check_disk(z, "density_via_cover");
    const double d = std::abs(derivative(spec, z));
    if (d < 1e-12) throw CriticalPointError("density_via_cover: |f'(z)| < 1e-12");
    return density_disk(z) / d;
}

inline double density(const HypPoint& p) { return p.cover ? density_via_cover(*p.cover, p.z) : density_disk(p.z); }

/// rho_Omega(f(z)) >= sqrt(pi / Area(Omega)), with Area(Omega) taken as the
/// image area at r = 1 on closed-disk specs and at r = 0.999 otherwise.
inline InequalityReport check_density_lower_bound(const FunctionSpec& spec, cplx z, int resolution = 1024,
                                                  double tol = 1e-6) {
    const double rho = density_via_cover(spec, z);
    const double r = spec.analytic_on_closed_disk() ? 1.0 : 0.999;
    const auto a = detail::area_impl(spec, r, resolution);
    if (!(a.value > 0.0)) throw DomainError("check_density_lower_bound: image has zero area");
    const double bound = std::sqrt(kPi / a.value);
    // d bound / d Area = -bound / (2 Area)
    const double err = bound * a.abs_error / (2.0 * a.value) + 8.0 * detail::kEps * rho;
    return make_report_ge(Inequality::DensityLowerBound, rho, bound, tol, err,
                          {{"spec", to_json(spec)}, {"z", {z.real(), z.imag()}}, {"area", a.value},
                           {"area_error", a.abs_error}});
}

struct DensityUpperCheck {
    double density = 0.0;
    double distance = 0.0;  // estimated dist(f(z), boundary of Omega)
    double cell_diagonal = 0.0;
    bool pass = true;       // density * (distance - diagonal) <= 1
};

/// Sanity check rho_Omega(w) <= 1 / dist(w, boundary), with the distance
/// read off a hit-cell raster of f(r D) (r = 1 on closed-disk specs, 0.999
/// otherwise); the tolerance is one cell diagonal.
inline DensityUpperCheck check_density_upper_bound(const FunctionSpec& spec, cplx z, int resolution = 512) {
    DensityUpperCheck out;
    out.density = density_via_cover(spec, z);
    const double r = spec.analytic_on_closed_disk() ? 1.0 : 0.999;
    const auto raster = rasterize(spec, r, resolution);
    out.distance = raster.distance_to_uncovered(evaluate(spec, z));
    out.cell_diagonal = raster.h * std::sqrt(2.0);
    out.pass = out.density * std::max(out.distance - out.cell_diagonal, 0.0) <= 1.0;
    return out;
}

struct HyperbolicGrowth {
    std::vector<double> R_grid;
    GrowthCurve area_curve; // phi_Area at r = tanh R
};

/// Area of the hyperbolic disk D_Omega(f(0), R) = f(tanh(R) D), normalized by
/// pi tanh^2 R, as a function of R.
inline HyperbolicGrowth hyperbolic_disk_growth(const FunctionSpec& spec, const std::vector<double>& R_grid,
                                               const FunctionalOptions& opts = {}, int jobs = 1) {
    HyperbolicGrowth out;
    out.R_grid = R_grid;
    std::vector<double> r;
    for (double R : R_grid) {
        if (!(R > 0.0)) throw DomainError("hyperbolic_disk_growth: R must be positive");
        r.push_back(std::tanh(R));
    }
    out.area_curve = phi_curve(spec, Functional::Area, r, opts, jobs);
    return out;
}

} // namespace schwarz
