#include "framehs/cli.hpp"

#include "framehs/csv.hpp"
#include "framehs/frames.hpp"
#include "framehs/gabor.hpp"
#include "framehs/hs.hpp"
#include "framehs/multiplier.hpp"
#include "framehs/report.hpp"
#include "framehs/reproduce.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

namespace framehs::cli {

namespace {

struct Common {
    std::string report_path;
    bool timing = false;
};

struct BoundsOpts {
    std::string frame;
};

struct DualOpts {
    std::string frame;
    std::string out;
    std::optional<double> pinv_tol;
};

struct ApproxOpts {
    std::string target;
    std::string frame;
    std::string frame2;
    std::optional<double> pinv_tol;
    std::string out_symbol;
    std::string out_approx;
};

struct HsInnerOpts {
    std::string target;
    std::string frame;
    std::string frame2;
    std::string method = "all";
};

struct GaborOpts {
    std::size_t n = 32;
    std::size_t a = 2;
    std::size_t b = 2;
    std::string export_path;
    std::string heatmap;
    std::string out_approx;
};

struct ReproduceOpts {
    double tol_scale = 1.0;
};

// --pinv-tol beats FRAMEHS_PINV_TOL, which beats the built-in default.
double pinv_tolerance(const std::optional<double>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("FRAMEHS_PINV_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || v < 0.0) {
            throw std::invalid_argument(std::string("FRAMEHS_PINV_TOL is not a tolerance: ") + env);
        }
        return v;
    }
    return -1.0;
}

void bounds_metrics(RunReport& r, const std::string& prefix, const Frame& f) {
    const FrameBounds b = frame_bounds(f);
    r.metric(prefix + "d", static_cast<std::uint64_t>(f.dim()));
    r.metric(prefix + "K", static_cast<std::uint64_t>(f.count()));
    r.metric(prefix + "rank", static_cast<std::uint64_t>(b.rank));
    r.metric(prefix + "A", b.lower);
    r.metric(prefix + "B", b.upper);
    r.metric(prefix + "kind", std::string(b.spans() ? "frame" : "frame-sequence"));
    r.metric(prefix + "bessel_only", b.bessel_only());
    r.metric(prefix + "tight", is_tight(b));
}

RunReport cmd_bounds(const BoundsOpts& o) {
    RunReport r("bounds");
    r.input("frame", o.frame);
    bounds_metrics(r, "", Frame(csv::read_matrix(o.frame)));
    return r;
}

RunReport cmd_dual(const DualOpts& o) {
    RunReport r("dual");
    r.input("frame", o.frame);
    const Frame f(csv::read_matrix(o.frame));
    const Frame dual(pinv(f.synthesis(), pinv_tolerance(o.pinv_tol)).adjoint());
    csv::write_matrix(o.out, dual.synthesis());
    r.output("dual", o.out);
    bounds_metrics(r, "", f);
    bounds_metrics(r, "dual_", dual);
    return r;
}

RunReport cmd_approx_mult(const ApproxOpts& o) {
    RunReport r("approx-mult");
    r.input("target", o.target);
    r.input("frame", o.frame);
    if (!o.frame2.empty()) {
        r.input("frame2", o.frame2);
    }
    const ComplexMatrix t = csv::read_matrix(o.target);
    // --frame synthesizes the output side (C^m), --frame2 analyzes the input
    // side (C^n); without --frame2 both are the same frame.
    const Frame f(csv::read_matrix(o.frame));
    const double tol = pinv_tolerance(o.pinv_tol);
    const auto check_shape = [&](const Frame& g) {
        if (t.rows() != f.dim() || t.cols() != g.dim() || f.count() != g.count()) {
            throw DimensionError("approx-mult: target " + shape_string(t) + " does not match frames " +
                                 shape_string(f.synthesis()) + " and " +
                                 shape_string(g.synthesis()));
        }
    };
    MultiplierApproximation approx;
    if (o.frame2.empty()) {
        check_shape(f);
        approx = best_multiplier_approx(t, f, tol);
        bounds_metrics(r, "frame_", f);
    } else {
        const Frame g(csv::read_matrix(o.frame2));
        check_shape(g);
        approx = best_multiplier_approx(t, g, f, tol);
        bounds_metrics(r, "frame_", f);
        bounds_metrics(r, "frame2_", g);
    }
    csv::write_vector(o.out_symbol, approx.upper_symbol);
    csv::write_matrix(o.out_approx, approx.approximant);
    r.output("symbol", o.out_symbol);
    r.output("approximant", o.out_approx);
    r.metric("residual_fro", approx.residual_fro);
    return r;
}

RunReport cmd_hs_inner(const HsInnerOpts& o, std::ostream& out) {
    RunReport r("hs-inner");
    r.input("target", o.target);
    r.input("frame", o.frame);
    r.input("frame2", o.frame2.empty() ? o.frame : o.frame2);
    r.input("method", o.method);
    const ComplexMatrix t = csv::read_matrix(o.target);
    const Frame g(csv::read_matrix(o.frame));
    const Frame h = o.frame2.empty() ? g : Frame(csv::read_matrix(o.frame2));
    if (t.rows() != g.dim() || t.cols() != h.dim()) {
        throw DimensionError("hs-inner: target " + shape_string(t) + " needs frames in C^" +
                             std::to_string(t.rows()) + " and C^" + std::to_string(t.cols()));
    }
    const std::uint64_t m = t.rows(), n = t.cols(), k = g.count(), l = h.count();
    struct Row {
        HsMethod method;
        const char* id;
        std::uint64_t predicted;
    };
    const Row rows[] = {
        {HsMethod::VecPair, "1", k * l * hs_cost::vec_pair(m, n)},
        {HsMethod::Direct, "2", k * l * hs_cost::direct(m, n)},
        {HsMethod::AllPairsSandwich, "3", hs_cost::all_pairs(m, n, k, l)},
        {HsMethod::KroneckerVec, "4", hs_cost::kron(m, n, k, l)},
    };
    std::optional<ComplexMatrix> reference;
    double max_dev = 0.0;
    for (const Row& row : rows) {
        if (o.method != "all" && o.method != row.id) {
            continue;
        }
        OpCount ctr;
        const HsTable table = hs_inner_table(t, g, h, row.method, ctr);
        const std::string key = "method" + std::string(row.id) + "_";
        r.metric(key + "ops", ctr.count);
        r.metric(key + "predicted_ops", row.predicted);
        r.metric(key + "ops_match", ctr.count == row.predicted);
        if (!reference) {
            reference = table.table;
            out << "table (row l, column k) = <T, g_k (x) conj(h_l)>:\n";
            csv::write_matrix(out, table.table);
        } else {
            for (std::size_t i = 0; i < table.table.rows(); ++i) {
                for (std::size_t j = 0; j < table.table.cols(); ++j) {
                    max_dev = std::max(max_dev, std::abs(table.table(i, j) - (*reference)(i, j)));
                }
            }
        }
    }
    if (o.method == "all") {
        r.metric("max_abs_deviation", max_dev);
        const bool third_wins = hs_cost::all_pairs(m, n, k, l) <= hs_cost::kron(m, n, k, l);
        r.metric("recommendation",
                 std::string(third_wins ? "method 3 (all-pairs sandwich) is cheapest for the full table"
                                        : "method 4 (Kronecker) is cheaper for this shape"));
    }
    return r;
}

RunReport cmd_gabor(const GaborOpts& o) {
    RunReport r("gabor");
    r.input("n", std::to_string(o.n));
    r.input("a", std::to_string(o.a));
    r.input("b", std::to_string(o.b));
    const auto sys = gabor::gabor_frame(gabor::gauss_window(o.n), o.a, o.b);
    if (!o.export_path.empty()) {
        csv::write_matrix(o.export_path, sys.frame.synthesis());
        r.output("frame", o.export_path);
    }
    r.metric("redundancy", static_cast<double>(sys.frame.count()) / static_cast<double>(o.n));
    bounds_metrics(r, "", sys.frame);
    return r;
}

RunReport cmd_gabor_experiment(const GaborOpts& o) {
    RunReport r("gabor-experiment");
    r.input("n", std::to_string(o.n));
    r.input("a", std::to_string(o.a));
    r.input("b", std::to_string(o.b));
    const auto exp = gabor::gabor_identity_experiment(o.n, o.a, o.b);
    std::string matrix_path = o.out_approx;
    if (matrix_path.empty()) {
        matrix_path = std::filesystem::path(o.heatmap).replace_extension(".csv").string();
    }
    gabor::write_magnitude_pgm(o.heatmap, exp.approximation.approximant);
    csv::write_matrix(matrix_path, exp.approximation.approximant);
    r.output("heatmap", o.heatmap);
    r.output("approximant", matrix_path);
    bounds_metrics(r, "", exp.system.frame);
    r.metric("residual_fro", exp.approximation.residual_fro);
    r.metric("relative_residual", exp.relative_residual());
    return r;
}

int cmd_reproduce(const ReproduceOpts& o, RunReport& r, std::ostream& out) {
    r.input("tol_scale", std::to_string(o.tol_scale));
    const auto checks = reproduce::run_all({o.tol_scale});
    reproduce::print_table(out, checks);
    std::size_t failed = 0;
    for (const auto& c : checks) {
        r.metric("criterion" + std::to_string(c.criterion) + " " + c.name,
                 std::string(c.passed ? "PASS " : "FAIL ") + c.detail);
        failed += c.passed ? 0 : 1;
    }
    r.metric("checks", static_cast<std::uint64_t>(checks.size()));
    r.metric("failed", static_cast<std::uint64_t>(failed));
    out << (failed == 0 ? "all checks passed\n" : std::to_string(failed) + " check(s) failed\n");
    return failed == 0 ? kSuccess : kAcceptance;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite frames, Hilbert-Schmidt operators and frame multiplier approximation",
                 "framehs"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--report", common.report_path, "Write a JSON run report to this file");
    app.add_flag("--timing", common.timing, "Print wall time");

    BoundsOpts bounds;
    auto* sc_bounds = app.add_subcommand("bounds", "Optimal frame bounds of a synthesis matrix");
    sc_bounds->add_option("--frame", bounds.frame, "d x K synthesis matrix CSV")->required();

    DualOpts dual;
    auto* sc_dual = app.add_subcommand("dual", "Canonical dual frame");
    sc_dual->add_option("--frame", dual.frame)->required();
    sc_dual->add_option("--out", dual.out, "Dual synthesis matrix CSV")->required();
    sc_dual->add_option("--pinv-tol", dual.pinv_tol)->check(CLI::NonNegativeNumber);

    ApproxOpts approx;
    auto* sc_approx = app.add_subcommand("approx-mult", "Best approximation by a frame multiplier");
    sc_approx->add_option("--target", approx.target, "m x n target matrix CSV")->required();
    sc_approx->add_option("--frame", approx.frame, "Synthesis frame in C^m")->required();
    sc_approx->add_option("--frame2", approx.frame2, "Analysis frame in C^n (default: --frame)");
    sc_approx->add_option("--pinv-tol", approx.pinv_tol, "Relative pinv truncation")
        ->check(CLI::NonNegativeNumber);
    sc_approx->add_option("--out-symbol", approx.out_symbol)->required();
    sc_approx->add_option("--out-approx", approx.out_approx)->required();

    HsInnerOpts hsi;
    auto* sc_hs = app.add_subcommand("hs-inner", "HS inner products against rank-one pairs");
    sc_hs->add_option("--target", hsi.target)->required();
    sc_hs->add_option("--frame", hsi.frame, "Frame (g_k) in C^m")->required();
    sc_hs->add_option("--frame2", hsi.frame2, "Frame (h_l) in C^n (default: --frame)");
    sc_hs->add_option("--method", hsi.method)
        ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));

    GaborOpts gab;
    auto* sc_gabor = app.add_subcommand("gabor", "Regular Gabor frame with a Gauss window");
    sc_gabor->add_option("--n", gab.n)->check(CLI::PositiveNumber);
    sc_gabor->add_option("--a", gab.a)->check(CLI::PositiveNumber);
    sc_gabor->add_option("--b", gab.b)->check(CLI::PositiveNumber);
    sc_gabor->add_option("--export", gab.export_path, "Write the synthesis matrix CSV");

    GaborOpts gexp;
    auto* sc_gexp = app.add_subcommand("gabor-experiment", "Approximate the identity by a Gabor multiplier");
    sc_gexp->add_option("--n", gexp.n)->check(CLI::PositiveNumber);
    sc_gexp->add_option("--a", gexp.a)->check(CLI::PositiveNumber);
    sc_gexp->add_option("--b", gexp.b)->check(CLI::PositiveNumber);
    sc_gexp->add_option("--out-heatmap", gexp.heatmap, "PGM of |approximant|")->required();
    sc_gexp->add_option("--out-approx", gexp.out_approx, "Approximant CSV (default: heatmap path with .csv)");

    ReproduceOpts rep;
    auto* sc_rep = app.add_subcommand("reproduce-paper", "Run the reference reproduction checks");
    sc_rep->add_option("--tol-scale", rep.tol_scale, "Scale every float tolerance")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kSuccess;
    std::optional<RunReport> report;
    try {
        if (*sc_bounds) {
            report = cmd_bounds(bounds);
        } else if (*sc_dual) {
            report = cmd_dual(dual);
        } else if (*sc_approx) {
            report = cmd_approx_mult(approx);
        } else if (*sc_hs) {
            report = cmd_hs_inner(hsi, out);
        } else if (*sc_gabor) {
            report = cmd_gabor(gab);
        } else if (*sc_gexp) {
            report = cmd_gabor_experiment(gexp);
        } else if (*sc_rep) {
            report.emplace("reproduce-paper");
            code = cmd_reproduce(rep, *report, out);
        }
    } catch (const csv::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report->set_wall_time_ms(ms);
    if (report->command() != "reproduce-paper") {
        report->print(out);
    }
    if (common.timing) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "wall_time_ms: %.3f\n", ms);
        out << buf;
    }
    if (!common.report_path.empty()) {
        try {
            report->write_json(common.report_path);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
    }
    return code;
}

} // namespace framehs::cli
