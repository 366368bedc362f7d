// Walks through the library on f(z) = z + 0.2 z^2: a few functionals at one
// radius, the normalized growth curves with their verdicts, two sharp
// inequalities, and the annulus-cover area that fails log-convexity.

#include "schwarz/bounds.hpp"
#include "schwarz/counterexample.hpp"
#include "schwarz/growth.hpp"
#include "schwarz/spec_io.hpp"

#include <cstdio>

using namespace schwarz;

int main() {
    const auto f = parse_spec_argument("poly[0,1,0.2]");
    std::printf("spec %s  hash %s\n", to_json(f).dump().c_str(), spec_hash(f).c_str());

    FunctionalOptions opts;
    opts.n = 4;
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::NDiam, Functional::Area, Functional::Perim}) {
        const auto v = compute_functional(f, kind, 0.5, opts);
        std::printf("%-6s r=0.5  %.12f  +- %.1e\n", to_string(kind).c_str(), v.value, v.abs_error);
    }

    std::printf("\nphi curves on the default grid (17 points, 0.05 .. 0.95)\n");
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::Area}) {
        const auto c = phi_curve(f, kind, default_grid(), opts);
        std::printf("%-6s phi(0.05)=%.6f phi(0.95)=%.6f  monotone=%s strict=%s log-convex=%s\n",
                    to_string(kind).c_str(), c.phi.front(), c.phi.back(), c.monotone->pass ? "yes" : "no",
                    c.monotone->strict ? "yes" : "no", c.log_convex && c.log_convex->pass ? "yes" : "no");
    }

    std::printf("\n");
    const auto m = FunctionSpec::moebius(0.0, 0.5, 1.0);
    std::printf("%s\n", to_json_line(check_don(m, 0.8)).c_str());
    std::printf("%s\n", to_json_line(check_poukka(FunctionSpec::polynomial({0, 0, 0, 1}), 3)).c_str());

    const double c = 0.1;
    const auto run = check_not_log_convex(c);
    std::printf("\nannulus cover c=%.2f: threshold depth %.6e, min second difference of log A %.3e -> %s\n", c,
                run.threshold_depth, run.min_second_diff, run.not_log_convex ? "not log-convex" : "log-convex");
    return 0;
}
