// Command-line front end: functionals, growth sweeps, inequality checks, the
// annulus-cover area run, disk n-diameter witnesses and the identity suite.
//
// Exit status: 0 success, 1 some verdict failed, 2 configuration or
// numerical error (reported as one JSON object on stderr).

#include "schwarz/bounds.hpp"
#include "schwarz/counterexample.hpp"
#include "schwarz/format.hpp"
#include "schwarz/functionals.hpp"
#include "schwarz/growth.hpp"
#include "schwarz/hyperbolic.hpp"
#include "schwarz/identities.hpp"
#include "schwarz/spec_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace schwarz;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Config {
    std::string spec_text;
    std::string kind = "rad";
    std::optional<double> r;
    double r_min = 0.05;
    double r_max = 0.95;
    int points = 17;
    int n = 4;
    int m = 4096;
    int restarts = 8;
    double tol = 1e-6;
    int resolution = 1024;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format;

    std::string check_name;
    std::string z_text = "0.5";
    std::optional<std::string> w_text;
    double c = 0.1;
    double quad_tol = 1e-8;
    bool profile = false;
    std::vector<double> x_grid{0.25, 0.5, 0.75, 1.0};
    int n_max = 64;
    int tuples = 200;
};

FunctionalOptions options_of(const Config& cfg) {
    FunctionalOptions o;
    o.m = cfg.m;
    o.n = cfg.n;
    o.restarts = cfg.restarts;
    o.seed = cfg.seed;
    o.resolution = cfg.resolution;
    return o;
}

FunctionSpec require_spec(const Config& cfg) {
    if (cfg.spec_text.empty()) throw SpecFormatError("--spec is required for this command");
    return parse_spec_argument(cfg.spec_text);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json value_json(const FunctionalValue& v) {
    json w = json::array();
    for (const auto& z : v.witness) w.push_back(complex_json(z));
    json j = {{"kind", to_string(v.kind)},
              {"value", v.value},
              {"lo", v.lo},
              {"hi", v.hi},
              {"abs_error", v.abs_error},
              {"witness", w},
              {"witness_angles", v.witness_angles},
              {"degenerate", v.degenerate},
              {"optimization_warning", v.optimization_warning}};
    if (v.n) j["n"] = v.n;
    if (v.kind == Functional::CapBracket) {
        j["bracket_inverted"] = v.bracket_inverted;
        j["endpoint_error"] = v.endpoint_error;
    }
    if (v.cross_check) j["cross_check"] = *v.cross_check;
    return j;
}

// ---------------------------------------------------------------- eval

int run_eval(const Config& cfg) {
    const auto spec = require_spec(cfg);
    const auto kind = functional_from_string(cfg.kind);
    const double r = cfg.r.value_or(0.5);
    const auto opts = options_of(cfg);
    const auto v = r == 1.0 ? unit_disk_value(spec, kind, opts) : compute_functional(spec, kind, r, opts);
    const std::string hash = spec_hash(spec);
    if (cfg.format == "csv") {
        std::cout << "kind,n,r,value,lo,hi,abs_error,spec_hash,seed\n"
                  << to_string(v.kind) << ',' << v.n << ',' << fmt17(r) << ',' << fmt17(v.value) << ','
                  << fmt17(v.lo) << ',' << fmt17(v.hi) << ',' << fmt17(v.abs_error) << ',' << hash << ','
                  << cfg.seed << "\n";
    } else {
        auto j = value_json(v);
        j["r"] = r;
        j["spec"] = to_json(spec);
        j["spec_hash"] = hash;
        j["seed"] = cfg.seed;
        std::cout << j.dump() << "\n";
    }
    if (v.optimization_warning) std::cerr << "warning: optimizer restarts disagree beyond the error estimate\n";
    return 0;
}

// ---------------------------------------------------------------- sweep

int run_sweep(const Config& cfg) {
    const auto spec = require_spec(cfg);
    const auto kind = functional_from_string(cfg.kind);
    const auto grid = geometric_grid(cfg.r_min, cfg.r_max, cfg.points);
    const auto curve = phi_curve(spec, kind, grid, options_of(cfg), cfg.jobs);
    const std::string hash = spec_hash(spec);
    const auto& mono = *curve.monotone;
    const bool convex_ok = !curve.log_convex || curve.log_convex->pass;

    if (cfg.format == "json") {
        json j = {{"kind", to_string(kind)},   {"normalization", normalization_name(kind)},
                  {"r", curve.r_grid},         {"phi", curve.phi},
                  {"abs_error", curve.abs_error}, {"bracket_width", curve.bracket_width},
                  {"spec_hash", hash},         {"seed", cfg.seed}};
        if (curve.n) j["n"] = curve.n;
        j["monotone"] = {{"pass", mono.pass}, {"strict", mono.strict}, {"tol", mono.tol},
                         {"min_forward_diff", mono.min_forward_diff}};
        if (mono.first_violation) j["monotone"]["first_violation"] = *mono.first_violation;
        if (curve.log_convex) {
            const auto& lc = *curve.log_convex;
            j["log_convex"] = {{"pass", lc.pass}, {"worst_second_diff", lc.worst_second_diff},
                               {"worst_index", lc.worst_index}, {"tol", lc.tol}};
            if (lc.loglog_pass) j["log_convex"]["loglog_pass"] = *lc.loglog_pass;
        }
        std::cout << j.dump() << "\n";
    } else {
        write_curve_csv(std::cout, curve, hash, cfg.seed);
        std::cout << "# monotone=" << (mono.pass ? "pass" : "fail") << " strict=" << (mono.strict ? "true" : "false")
                  << " min_forward_diff=" << fmt17(mono.min_forward_diff) << " tol=" << fmt17(mono.tol);
        if (mono.first_violation) std::cout << " first_violation=" << *mono.first_violation;
        std::cout << "\n";
        if (curve.log_convex) {
            const auto& lc = *curve.log_convex;
            std::cout << "# log_convex=" << (lc.pass ? "pass" : "fail")
                      << " worst_second_diff=" << fmt17(lc.worst_second_diff) << " worst_index=" << lc.worst_index
                      << " tol=" << fmt17(lc.tol);
            if (lc.loglog_pass) std::cout << " loglog=" << (*lc.loglog_pass ? "pass" : "fail");
            std::cout << "\n";
        }
    }
    return mono.pass && convex_ok ? 0 : kExitFail;
}

// ---------------------------------------------------------------- check

struct Batch {
    std::vector<InequalityReport> reports;
    std::vector<std::string> hashes;
};

void add(Batch& b, InequalityReport rep, const std::string& hash) {
    b.reports.push_back(std::move(rep));
    b.hashes.push_back(hash);
}

void add_spec_checks(Batch& b, const std::string& name, const FunctionSpec& spec, const Config& cfg) {
    const auto opts = options_of(cfg);
    const std::string hash = spec_hash(spec);
    const double r = cfg.r.value_or(0.5);
    if (name == "growth") {
        const auto kind = functional_from_string(cfg.kind);
        add(b, check_growth(normalize(spec, kind, opts), r, kind, cfg.tol, opts), hash);
    } else if (name == "don") {
        const cplx z = detail::parse_complex(cfg.z_text);
        if (cfg.w_text)
            add(b, check_don_symmetric(spec, z, detail::parse_complex(*cfg.w_text), cfg.tol, opts), hash);
        else
            add(b, check_don(spec, z, cfg.tol, opts), hash);
    } else if (name == "poukka") {
        add(b, check_poukka(spec, cfg.n, cfg.tol, opts), hash);
    } else if (name == "schur") {
        add(b, check_schur(spec, r, cfg.tol, opts), hash);
    } else if (name == "isoperimetric") {
        const auto a = area(spec, r, cfg.resolution);
        const auto len = curve_length(spec, r);
        add(b, check_isoperimetric(a.value, len.value, cfg.tol, a.abs_error, len.abs_error), hash);
    } else if (name == "polya" || name == "areadn") {
        for (auto& rep : check_polya_chain(spec, r, cfg.n, cfg.tol, opts)) add(b, std::move(rep), hash);
    } else if (name == "density") {
        add(b, check_density_lower_bound(spec, detail::parse_complex(cfg.z_text), cfg.resolution, cfg.tol), hash);
    } else {
        throw DomainError("unknown check '" + name + "'");
    }
}

// A fixed battery on maps where each inequality is known to hold, most of
// them at equality.
void add_battery(Batch& b, const Config& cfg) {
    auto opts = options_of(cfg);
    const auto moebius = FunctionSpec::moebius(0.0, 0.5, 1.0);
    add(b, check_don(moebius, 0.8, cfg.tol, opts), spec_hash(moebius));
    add(b, check_don_symmetric(moebius, 0.3, cplx(-0.2, 0.4), cfg.tol, opts), spec_hash(moebius));
    for (int n = 1; n <= 8; ++n) {
        std::vector<cplx> c(n + 1, 0.0);
        c[n] = 1.0;
        const auto zn = FunctionSpec::polynomial(c);
        add(b, check_poukka(zn, n, cfg.tol, opts), spec_hash(zn));
    }
    const auto z2 = FunctionSpec::polynomial({0.0, 0.0, 1.0});
    for (double r : {0.25, 0.5, 0.75}) add(b, check_schur(z2, r, cfg.tol, opts), spec_hash(z2));
    std::vector<cplx> schur_extremal(41);
    schur_extremal[1] = 0.5;
    for (int k = 1; k < 40; ++k) schur_extremal[k + 1] = 0.75 * std::pow(-0.5, k - 1);
    const auto ext = FunctionSpec::series(schur_extremal);
    add(b, check_schur(ext, 0.6, cfg.tol, opts), spec_hash(ext));

    const auto p = FunctionSpec::polynomial({0.0, 1.0, 0.2});
    for (Functional kind : {Functional::Rad, Functional::Diam, Functional::Area}) {
        const auto normalized = normalize(p, kind, opts);
        for (double r : {0.3, 0.6, 0.9}) add(b, check_growth(normalized, r, kind, cfg.tol, opts), spec_hash(p));
    }
    for (double r : {0.3, 0.6, 0.9}) {
        const auto a = area(p, r, cfg.resolution);
        const auto len = curve_length(p, r);
        add(b, check_isoperimetric(a.value, len.value, cfg.tol, a.abs_error, len.abs_error), spec_hash(p));
        for (auto& rep : check_polya_chain(p, r, 4, cfg.tol, opts)) add(b, std::move(rep), spec_hash(p));
    }
    const auto cover = FunctionSpec::annulus_cover(1.0);
    add(b, check_density_lower_bound(cover, 0.0, cfg.resolution, cfg.tol), spec_hash(cover));
    for (int n = 2; n <= 8; ++n) {
        const PointTuple roots(roots_of_unity(n, 0.7));
        add(b, hadamard_bound_check(roots), "");
    }
}

int run_identities(const Config& cfg, bool quiet);

int run_check(const Config& cfg) {
    Batch b;
    bool identities_ok = true;
    if (cfg.check_name == "all") {
        if (!cfg.spec_text.empty()) throw DomainError("check all runs its own battery; drop --spec");
        add_battery(b, cfg);
        identities_ok = run_identities(cfg, true) == 0;
    } else if (cfg.check_name == "identities") {
        return run_identities(cfg, false);
    } else {
        add_spec_checks(b, cfg.check_name, require_spec(cfg), cfg);
    }

    std::size_t failures = 0;
    if (cfg.format == "csv") std::cout << "name,lhs,rhs,slack,tol,relation,equality,pass,spec_hash,seed\n";
    for (std::size_t i = 0; i < b.reports.size(); ++i) {
        auto rep = b.reports[i];
        if (!rep.pass) ++failures;
        if (cfg.format == "csv") {
            std::cout << to_string(rep.name) << ',' << fmt17(rep.lhs) << ',' << fmt17(rep.rhs) << ','
                      << fmt17(rep.slack) << ',' << fmt17(rep.tol) << ',' << rep.relation << ','
                      << (rep.equality ? "true" : "false") << ',' << (rep.pass ? "PASS" : "FAIL") << ','
                      << b.hashes[i] << ',' << cfg.seed << "\n";
        } else {
            rep.context["spec_hash"] = b.hashes[i];
            rep.context["seed"] = cfg.seed;
            std::cout << to_json_line(rep) << "\n";
        }
    }
    std::cerr << "check " << cfg.check_name << ": " << b.reports.size() - failures << "/" << b.reports.size()
              << " PASS" << (identities_ok ? "" : ", identity suite FAIL") << "\n";
    return failures == 0 && identities_ok ? 0 : kExitFail;
}

// ---------------------------------------------------------------- counterexample

int run_counterexample(const Config& cfg) {
    const std::string hash = spec_hash(FunctionSpec::annulus_cover(cfg.c));
    if (cfg.profile) {
        const auto prof = limit_profile(cfg.c, cfg.x_grid);
        std::cout << "# c=" << fmt17(cfg.c) << " spec_hash=" << hash << " seed=" << cfg.seed << "\n"
                  << "x,value,target,difference,value_error,target_error,spec_hash,seed\n";
        for (const auto& p : prof)
            std::cout << fmt17(p.x) << ',' << fmt17(p.value) << ',' << fmt17(p.target) << ','
                      << fmt17(p.value - p.target) << ',' << fmt17(p.value_error) << ',' << fmt17(p.target_error)
                      << ',' << hash << ',' << cfg.seed << "\n";
        return 0;
    }
    const auto run = check_not_log_convex(cfg.c, cfg.points < 3 ? 33 : cfg.points, cfg.quad_tol);
    std::cout << "# c=" << fmt17(run.c) << " threshold=" << fmt17(run.threshold)
              << " threshold_depth=" << fmt17(run.threshold_depth) << " quad_tol=" << fmt17(run.quad_tol)
              << " spec_hash=" << hash << " seed=" << cfg.seed << "\n"
              << "r,A,logA_second_diff,regime,log_r,abs_error,spec_hash,seed\n";
    for (std::size_t i = 0; i < run.A_values.size(); ++i) {
        std::string d2;
        if (i > 0 && i + 1 < run.A_values.size()) d2 = fmt17(run.second_diffs[i - 1]);
        std::cout << fmt17(run.r_grid[i]) << ',' << fmt17(run.A_values[i]) << ',' << d2 << ','
                  << to_string(run.regimes[i]) << ',' << fmt17(run.log_r[i]) << ',' << fmt17(run.A_errors[i]) << ','
                  << hash << ',' << cfg.seed << "\n";
    }
    std::cout << "# not_log_convex=" << (run.not_log_convex ? "true" : "false")
              << " min_second_diff=" << fmt17(run.min_second_diff) << "\n";
    if (run.clamp_trips > 0)
        std::cerr << "note: " << run.clamp_trips << " arccos argument(s) clamped into [-1, 1]\n";
    return 0;
}

// ---------------------------------------------------------------- fekete

int run_fekete(const Config& cfg) {
    const auto spec = cfg.spec_text.empty() ? FunctionSpec::polynomial({0.0, 1.0}) : require_spec(cfg);
    const double r = cfg.r.value_or(0.999);
    const auto v = n_diameter(spec, r, cfg.n, cfg.m, cfg.restarts, cfg.seed);
    const std::string hash = spec_hash(spec);
    std::optional<RootsMatch> align;
    if (v.witness.size() >= 2) {
        try {
            align = align_to_roots(PointTuple(v.witness));
        } catch (const DomainError&) {
            // witness outside the closed disk or coincident: no alignment to report
        }
    }
    if (cfg.format == "json") {
        auto j = value_json(v);
        j["r"] = r;
        j["spec_hash"] = hash;
        j["seed"] = cfg.seed;
        if (align) j["roots_max_deviation"] = align->max_deviation;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "# n=" << cfg.n << " r=" << fmt17(r) << " d_n=" << fmt17(v.value)
                  << " abs_error=" << fmt17(v.abs_error)
                  << " optimization_warning=" << (v.optimization_warning ? "true" : "false");
        if (align) std::cout << " roots_max_deviation=" << fmt17(align->max_deviation);
        std::cout << " spec_hash=" << hash << " seed=" << cfg.seed << "\n"
                  << "index,angle,re,im,spec_hash,seed\n";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            std::cout << i << ',' << fmt17(v.witness_angles[i]) << ',' << fmt17(v.witness[i].real()) << ','
                      << fmt17(v.witness[i].imag()) << ',' << hash << ',' << cfg.seed << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- identities

int run_identities(const Config& cfg, bool quiet) {
    if (cfg.n_max < 2 || cfg.n_max > 64) throw DomainError("--n-max must lie in [2, 64]");
    struct Family {
        std::string name;
        int count = 0;
        int failures = 0;
        double worst = 0.0;
    };
    Family first{"roots_of_unity_sum"}, second{"second_sum"}, vdm{"vandermonde"}, had{"hadamard"}, fek{"fekete_roots"};
    for (int n = 2; n <= cfg.n_max; ++n) {
        for (int j = 1; j <= n; ++j) {
            const auto a = roots_of_unity_sum(n, j);
            ++first.count;
            first.failures += !a.pass;
            first.worst = std::max(first.worst, a.residual);
            const auto s = second_sum(n, j);
            ++second.count;
            second.failures += !s.pass;
            second.worst = std::max(second.worst, s.residual);
        }
        ++fek.count;
        fek.failures += !fekete_witness_is_roots(PointTuple(roots_of_unity(n, 0.3)), 1e-12);
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n_hi = std::min(cfg.n_max, 16);
    for (int t = 0; t < cfg.tuples; ++t) {
        const int n = 2 + t % (n_hi - 1);
        std::vector<cplx> pts;
        while (static_cast<int>(pts.size()) < n) {
            const cplx z = std::polar(std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
            bool ok = true;
            for (const auto& q : pts) ok = ok && std::abs(z - q) > 1e-9;
            if (ok) pts.push_back(z);
        }
        const PointTuple tuple(pts);
        const auto v = vandermonde_check(tuple);
        ++vdm.count;
        vdm.failures += !v.match;
        vdm.worst = std::max(vdm.worst, v.relative_difference);
        const auto h = hadamard_bound_check(tuple);
        ++had.count;
        had.failures += !h.pass;
        had.worst = std::max(had.worst, -h.slack / h.rhs);
    }
    int failures = 0;
    if (!quiet && cfg.format == "json") {
        for (const auto* f : {&first, &second, &vdm, &had, &fek})
            std::cout << json{{"family", f->name},   {"count", f->count},   {"failures", f->failures},
                              {"worst", f->worst},   {"n_max", cfg.n_max},  {"seed", cfg.seed}}
                             .dump()
                      << "\n";
    } else if (!quiet) {
        std::cout << "family,count,failures,worst,n_max,seed\n";
        for (const auto* f : {&first, &second, &vdm, &had, &fek})
            std::cout << f->name << ',' << f->count << ',' << f->failures << ',' << fmt17(f->worst) << ','
                      << cfg.n_max << ',' << cfg.seed << "\n";
    }
    for (const auto* f : {&first, &second, &vdm, &had, &fek}) failures += f->failures;
    return failures == 0 ? 0 : kExitFail;
}

void report_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Growth functionals of analytic maps of the unit disk"};
    app.require_subcommand(1);

    auto spec_opt = [&](CLI::App* sub) {
        sub->add_option("--spec", cfg.spec_text, "inline JSON, shorthand (poly[..], series[..], moebius(a,b,c), "
                                                 "annulus(c)) or a JSON file");
    };
    auto accuracy = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "tuple size for ndiam / cap");
        sub->add_option("--m", cfg.m, "boundary samples")->check(CLI::Range(4, 1 << 22));
        sub->add_option("--restarts", cfg.restarts, "optimizer restarts")->check(CLI::Range(1, 1000));
        sub->add_option("--resolution", cfg.resolution, "area scan rows / raster size")->check(CLI::Range(16, 1 << 16));
        sub->add_option("--seed", cfg.seed, "seed for optimizer restarts");
    };

    auto* eval = app.add_subcommand("eval", "one functional at one radius (r = 1: the unit disk)");
    spec_opt(eval);
    eval->add_option("--kind", cfg.kind, "rad, diam, ndiam, cap, area, perim");
    eval->add_option("--r", cfg.r, "radius");
    accuracy(eval);
    eval->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

    auto* sweep = app.add_subcommand("sweep", "phi curve on a geometric grid with verdicts");
    spec_opt(sweep);
    sweep->add_option("--kind", cfg.kind);
    sweep->add_option("--r-min", cfg.r_min);
    sweep->add_option("--r-max", cfg.r_max);
    sweep->add_option("--points", cfg.points);
    sweep->add_option("--jobs", cfg.jobs)->check(CLI::Range(1, 256));
    accuracy(sweep);
    sweep->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

    auto* check = app.add_subcommand("check", "inequality checks: growth, don, poukka, schur, isoperimetric, "
                                              "polya, density, identities, all");
    check->add_option("name", cfg.check_name)->required();
    spec_opt(check);
    check->add_option("--kind", cfg.kind);
    check->add_option("--r", cfg.r);
    check->add_option("--z", cfg.z_text, "point of the disk, e.g. 0.8 or 0.3+0.2i");
    check->add_option("--w", cfg.w_text, "second point (don: symmetric form)");
    check->add_option("--tol", cfg.tol, "relative tolerance")->check(CLI::NonNegativeNumber);
    check->add_option("--n-max", cfg.n_max);
    check->add_option("--tuples", cfg.tuples);
    accuracy(check);
    check->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

    auto* counter = app.add_subcommand("counterexample", "area of the annulus cover across the univalence radius");
    counter->add_option("--c", cfg.c, "annulus parameter c > 0");
    counter->add_option("--points", cfg.points, "grid points (default 33)");
    counter->add_option("--tol", cfg.quad_tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    counter->add_flag("--profile", cfg.profile, "emit the scaled small-c profile instead");
    counter->add_option("--x", cfg.x_grid, "profile depths in units of the threshold depth");
    counter->add_option("--seed", cfg.seed);

    auto* fekete = app.add_subcommand("fekete", "n-diameter witness tuple");
    spec_opt(fekete);
    fekete->add_option("--r", cfg.r);
    accuracy(fekete);
    fekete->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

    auto* ident = app.add_subcommand("identities", "roots-of-unity sums and Vandermonde suite");
    ident->add_option("--n-max", cfg.n_max);
    ident->add_option("--tuples", cfg.tuples);
    ident->add_option("--seed", cfg.seed);
    ident->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("config", e.what());
        return kExitConfig;
    }
    if (counter->parsed() && !counter->count("--points")) cfg.points = 33;

    try {
        if (eval->parsed()) {
            if (cfg.format.empty()) cfg.format = "json";
            return run_eval(cfg);
        }
        if (cfg.format.empty()) cfg.format = check->parsed() ? "json" : "csv";
        if (sweep->parsed()) return run_sweep(cfg);
        if (check->parsed()) return run_check(cfg);
        if (counter->parsed()) return run_counterexample(cfg);
        if (fekete->parsed()) return run_fekete(cfg);
        if (ident->parsed()) return run_identities(cfg, false);
    } catch (const Error& e) {
        report_error(e.kind(), e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        report_error("internal", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
