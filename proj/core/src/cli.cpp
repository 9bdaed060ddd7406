#include "iwkin/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "iwkin/collision.hpp"
#include "iwkin/figure.hpp"
#include "iwkin/io.hpp"
#include "iwkin/observations.hpp"
#include "iwkin/zero_curve.hpp"

namespace iwkin {

namespace {

struct CommonOpts {
    std::string config_path;
    std::string format = "csv";
    std::string out_path;
    int threads = 0;
};

QuadratureConfig resolve_config(const CommonOpts& o) {
    if (o.config_path.empty()) {
        QuadratureConfig cfg;
        cfg.validate();
        return cfg;
    }
    return load_config_file(o.config_path);
}

// Writes either to the --out file or to the stream given.
int with_sink(const CommonOpts& o, std::ostream& out, std::ostream& err,
              const std::function<void(std::ostream&)>& writer) {
    if (o.out_path.empty()) {
        writer(out);
        return 0;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file: " << o.out_path << "\n";
        return 1;
    }
    writer(f);
    if (!f) {
        err << "error: write failed: " << o.out_path << "\n";
        return 1;
    }
    return 0;
}

void print_obs_table(const std::vector<ObservationRecord>& records, std::ostream& out) {
    out << "name      basis       omega exp (a)   wavenumber exp (b)   derived x        derived "
           "y\n";
    for (const auto& r : records) {
        auto iv = [](const Interval& v) {
            std::ostringstream os;
            if (v.is_point())
                os << format_sig9(v.lo);
            else
                os << format_sig9(v.lo) << ".." << format_sig9(v.hi);
            return os.str();
        };
        char line[256];
        std::snprintf(line, sizeof line, "%-9s %-11s %-15s %-20s %-16s %s\n", r.name.c_str(),
                      to_string(r.wavenumber_basis), iv(r.omega_exponent).c_str(),
                      iv(r.vertical_exponent).c_str(), iv(r.derived_x).c_str(),
                      iv(r.derived_y).c_str());
        out << line;
    }
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("range must be written lo:hi");
    try {
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1));
        if (!(hi > lo))
            throw CLI::ValidationError("range must be increasing");
        return {lo, hi};
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad range: " + text);
    }
}

int run_selftest(const QuadratureConfig& cfg, std::ostream& out) {
    int failures = 0;
    const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty())
            out << "  (" << detail << ")";
        out << "\n";
        if (!ok)
            ++failures;
    };

    for (const auto& [x, y, label] :
         {std::tuple{3.5, 0.5, "analytic zero (3.5, 0.5)"}, std::tuple{4.0, 0.0, "GM zero (4.0, 0.0)"}}) {
        const IntegralResult r = evaluate_I({x, y, 1.0}, {1.0, 1.0}, cfg);
        std::ostringstream det;
        det << "status " << to_string(r.status) << ", normalized residual "
            << format_sig9(r.normalized_residual());
        report(label, r.status == IntegralStatus::Converged && r.normalized_residual() <= 1e-2,
               det.str());
    }

    {
        // detailed balance of the equipartition spectrum on random in-box points
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double k = std::pow(10.0, -0.3 + 0.6 * uni(rng));
            const double u = std::pow(10.0, -2.0 + 3.0 * uni(rng));
            const double v = k * (2.0 * uni(rng) - 1.0) * 0.999;
            const double m = std::pow(10.0, -0.3 + 0.6 * uni(rng));
            const double k1 = 0.5 * (u + k + v), k2 = 0.5 * (u + k - v);
            const IntegrandTerms t = integrand_terms({1.0, -1.0, 1.0}, {k, m}, k1, k2);
            if (t.term_scale > 0.0)
                worst = std::max(worst, std::fabs(t.value) / t.term_scale);
        }
        report("equipartition detailed balance", worst <= 1e-10,
               "worst |F|/scale " + format_sig9(worst));
    }

    {
        const SpectralExponents s{3.6, 0.2, 1.0};
        const ScalingCheck sc = scaling_exponent_check(s, {1.0, 1.0}, 1.7, 1.3, cfg);
        const double node_err = std::fabs(sc.measured_node / sc.expected_node - 1.0);
        const double int_err = std::fabs(sc.measured_integral / sc.expected_integral - 1.0);
        report("bihomogeneity (node level)", node_err <= 1e-12,
               "relative error " + format_sig9(node_err));
        report("bihomogeneity (integral level)", int_err <= 5.0 * cfg.rel_tol,
               "relative error " + format_sig9(int_err));
    }
    out << (failures == 0 ? "selftest: all checks passed\n"
                          : "selftest: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"angle-averaged three-wave collision integral for oceanic internal waves"};
    app.name("iwkin");
    app.require_subcommand(1);

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "evaluate I(x, y) at one exponent pair");
    double ex = 0.0, ey = 0.0, ek = 1.0, em = 1.0;
    CommonOpts eval_opts;
    eval_cmd->add_option("--x", ex, "horizontal action exponent")->required();
    eval_cmd->add_option("--y", ey, "vertical action exponent")->required();
    eval_cmd->add_option("--k", ek, "evaluation horizontal wavenumber (default 1)");
    eval_cmd->add_option("--m", em, "evaluation vertical wavenumber (default 1)");
    eval_cmd->add_option("--config", eval_opts.config_path, "quadrature config file");

    // --- curve ---
    auto* curve_cmd = app.add_subcommand("curve", "trace the steady-state exponent curve");
    double cx0 = 3.2, cx1 = 4.1, cstep = 0.1;
    CommonOpts curve_opts;
    curve_cmd->add_option("--x-start", cx0, "first slice")->required();
    curve_cmd->add_option("--x-end", cx1, "last slice")->required();
    curve_cmd->add_option("--step", cstep, "slice spacing")->required();
    curve_cmd->add_option("--format", curve_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    curve_cmd->add_option("--out", curve_opts.out_path, "output file (default stdout)");
    curve_cmd->add_option("--config", curve_opts.config_path, "quadrature config file");

    // --- grid ---
    auto* grid_cmd = app.add_subcommand("grid", "evaluate I on a tensor grid");
    std::string gxr = "1:5", gyr = "-1.5:2.5";
    int gnx = 41, gny = 41;
    CommonOpts grid_opts;
    grid_cmd->add_option("--x-range", gxr, "x range lo:hi")->required();
    grid_cmd->add_option("--y-range", gyr, "y range lo:hi")->required();
    grid_cmd->add_option("--nx", gnx, "grid points in x")->required();
    grid_cmd->add_option("--ny", gny, "grid points in y")->required();
    grid_cmd->add_option("--format", grid_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    grid_cmd->add_option("--out", grid_opts.out_path, "output file (default stdout)");
    grid_cmd->add_option("--config", grid_opts.config_path, "quadrature config file");
    grid_cmd->add_option("--threads", grid_opts.threads, "worker threads (default: hardware)");

    // --- obs ---
    auto* obs_cmd = app.add_subcommand("obs", "print the embedded observation table");
    std::string obs_format = "table";
    CommonOpts obs_opts;
    obs_cmd->add_option("--format", obs_format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    obs_cmd->add_option("--out", obs_opts.out_path, "output file (default stdout)");

    // --- figure ---
    auto* fig_cmd = app.add_subcommand("figure", "grid + curve + SVG reproduction");
    CommonOpts fig_opts;
    int fnx = 81, fny = 81;
    double fx0 = 3.2, fx1 = 4.2, fstep = 0.05;
    fig_cmd->add_option("--out", fig_opts.out_path, "output SVG path")->required();
    fig_cmd->add_option("--config", fig_opts.config_path, "quadrature config file");
    fig_cmd->add_option("--threads", fig_opts.threads, "worker threads (default: hardware)");
    fig_cmd->add_option("--nx", fnx, "grid points in x (default 81)");
    fig_cmd->add_option("--ny", fny, "grid points in y (default 81)");
    fig_cmd->add_option("--trace-start", fx0, "curve trace start (default 3.2)");
    fig_cmd->add_option("--trace-end", fx1, "curve trace end (default 4.2)");
    fig_cmd->add_option("--trace-step", fstep, "curve trace step (default 0.05)");

    // --- selftest ---
    auto* self_cmd = app.add_subcommand("selftest", "run the built-in consistency checks");
    CommonOpts self_opts;
    self_cmd->add_option("--config", self_opts.config_path, "quadrature config file");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*eval_cmd) {
            if (em == 0.0) {
                err << "error: m must be nonzero\n";
                return 1;
            }
            const QuadratureConfig cfg = resolve_config(eval_opts);
            // spectra are even in m
            const IntegralResult r = evaluate_I({ex, ey, 1.0}, {ek, std::fabs(em)}, cfg);
            out << to_json(r) << "\n";
            return 0;
        }
        if (*curve_cmd) {
            const QuadratureConfig cfg = resolve_config(curve_opts);
            const TraceResult tr = trace_curve(cx0, cx1, cstep, cfg);
            for (const auto& d : tr.diagnostics)
                err << "curve: " << d << "\n";
            if (tr.points.empty()) {
                err << "error: trace produced no points\n";
                return 1;
            }
            return with_sink(curve_opts, out, err, [&](std::ostream& sink) {
                if (curve_opts.format == "json")
                    sink << to_json(tr.points, tr.thickness) << "\n";
                else
                    emit_csv(tr.points, sink);
            });
        }
        if (*grid_cmd) {
            const QuadratureConfig cfg = resolve_config(grid_opts);
            const auto [xlo, xhi] = parse_range(gxr);
            const auto [ylo, yhi] = parse_range(gyr);
            const GridField g = grid_I(xlo, xhi, ylo, yhi, gnx, gny, cfg, grid_opts.threads);
            return with_sink(grid_opts, out, err, [&](std::ostream& sink) {
                if (grid_opts.format == "json")
                    sink << to_json(g) << "\n";
                else
                    emit_csv(g, sink);
            });
        }
        if (*obs_cmd) {
            const auto records = builtin_observations();
            return with_sink(obs_opts, out, err, [&](std::ostream& sink) {
                if (obs_format == "json")
                    sink << to_json(records) << "\n";
                else if (obs_format == "csv")
                    emit_csv(records, sink);
                else
                    print_obs_table(records, sink);
            });
        }
        if (*fig_cmd) {
            const QuadratureConfig cfg = resolve_config(fig_opts);
            FigureBundle bundle;
            err << "figure: evaluating " << fnx << "x" << fny << " grid...\n";
            bundle.grid = grid_I(1.0, 5.0, -1.5, 2.5, fnx, fny, cfg, fig_opts.threads);
            err << "figure: tracing zero curve...\n";
            const TraceResult tr = trace_curve(fx0, fx1, fstep, cfg);
            for (const auto& d : tr.diagnostics)
                err << "figure: " << d << "\n";
            bundle.curve = tr.points;
            bundle.observations = builtin_observations();
            const std::string svg = render_figure(bundle);
            std::ofstream f(fig_opts.out_path, std::ios::binary);
            if (!f) {
                err << "error: cannot open output file: " << fig_opts.out_path << "\n";
                return 1;
            }
            f << svg;
            if (!f) {
                err << "error: write failed: " << fig_opts.out_path << "\n";
                return 1;
            }
            err << "figure: wrote " << fig_opts.out_path << "\n";
            return 0;
        }
        if (*self_cmd) {
            const QuadratureConfig cfg = resolve_config(self_opts);
            return run_selftest(cfg, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n" << app.help();
    return 1;
}

}  // namespace iwkin
