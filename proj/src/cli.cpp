#include "monospline/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "monospline/analysis.hpp"
#include "monospline/errors.hpp"
#include "monospline/experiments.hpp"
#include "monospline/io.hpp"

namespace monospline {

namespace {

const std::vector<int> kDefaultConvergeSizes = {5, 9, 17, 33, 65};
constexpr int kDefaultApproxSize = 9;

std::string join(const Polynomial& p) {
    std::string out = "[";
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k > 0) out += ", ";
        out += format_number(p.coeffs()[k]);
    }
    return out + "]";
}

/// The target on [a, b]. A proper subinterval of the function's own domain
/// drops the exact modulus, which is only stated for the full domain.
TargetFunction resolve_target(const RunConfig& cfg) {
    TargetFunction f;
    if (cfg.input_csv) {
        const auto samples = parse_samples_csv(read_file(*cfg.input_csv));
        f = sampled_function(std::filesystem::path(*cfg.input_csv).stem().string(), samples);
    } else {
        f = find_builtin(*cfg.function_id);
    }
    const double a = cfg.a.value_or(f.domain.lo);
    const double b = cfg.b.value_or(f.domain.hi);
    if (!(a < b)) throw ConfigInvalid("--a must be smaller than --b");
    if (a < f.domain.lo || b > f.domain.hi) {
        throw ConfigInvalid("[--a, --b] must lie inside the domain [" + format_number(f.domain.lo) + ", " +
                            format_number(f.domain.hi) + "] of '" + f.id + "'");
    }
    if (a != f.domain.lo || b != f.domain.hi) {
        f.domain = {a, b};
        f.exact_modulus = nullptr;
    }
    return f;
}

void prepare_out_dir(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

void require_target(const RunConfig& cfg) {
    if (!cfg.function_id && !cfg.input_csv) throw ConfigInvalid("one of --function or --input-csv is required");
}

std::string row_text(const ConvergenceRow& r) {
    return "size=" + std::to_string(r.partition_size) + " norm=" + format_number(r.partition_norm) +
           " lp_error=" + format_number(r.lp_error) + " sup_global=" + format_number(r.sup_error_global) +
           " sup_inner=" + format_number(r.sup_error_inner) +
           " prop3_bound=" + (r.prop3_bound ? format_number(*r.prop3_bound) : std::string("-"));
}

int workers_from_env() {
    const char* env = std::getenv("MONOSPLINE_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw ConfigInvalid("MONOSPLINE_WORKERS must be a positive integer");
    return static_cast<int>(v);
}

}  // namespace

void RunConfig::validate() const {
    try {
        approx.validate();
    } catch (const ConfigInvalid& e) {
        throw ConfigInvalid(std::string(e.what()) + " (see --p, --m, --l, --tol, --elevation)");
    }
    if (function_id && input_csv) throw ConfigInvalid("--function and --input-csv are mutually exclusive");
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 2) throw ConfigInvalid("--sizes entries must be >= 2");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw ConfigInvalid("--sizes must be strictly increasing");
    }
    if (!(inner_fraction > 0.0 && inner_fraction < 1.0)) throw ConfigInvalid("--inner-fraction must lie in (0, 1)");
    if (workers < 1) throw ConfigInvalid("--workers must be >= 1");
    if (n_max < 1) throw ConfigInvalid("--n-max must be >= 1");
    if (trials < 1) throw ConfigInvalid("--trials must be >= 1");
    if (a && b && !(*a < *b)) throw ConfigInvalid("--a must be smaller than --b");
}

int cmd_approx(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.validate();
    require_target(cfg);
    if (cfg.sizes.size() > 1) throw ConfigInvalid("approx takes a single --sizes value");
    const TargetFunction f = resolve_target(cfg);
    const int k = cfg.sizes.empty() ? kDefaultApproxSize : cfg.sizes.front();
    const Partition part = sequence(cfg.partition, f.domain.lo, f.domain.hi, std::vector<int>{k}, cfg.seed).front();

    const ProjectionResult res = project(f, part, cfg.approx);
    prepare_out_dir(cfg);
    write_file(out_path(cfg, "spline.json"), projection_result_to_json(res));
    write_file(out_path(cfg, "residual.csv"), residual_curve_csv(f, res.spline.spline));
    out << "objective=" << format_number(res.objective) << " optimality_gap=" << format_number(res.optimality_gap)
        << " iterations=" << res.iterations << " converged=" << (res.converged ? "true" : "false") << '\n';
    if (!res.converged) {
        err << "monospline: solver did not converge within " << cfg.approx.max_iterations << " iterations\n";
        return kExitSolver;
    }
    return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.validate();
    require_target(cfg);
    const TargetFunction f = resolve_target(cfg);
    const std::vector<int>& sizes = cfg.sizes.empty() ? kDefaultConvergeSizes : cfg.sizes;
    const auto parts = sequence(cfg.partition, f.domain.lo, f.domain.hi, sizes, cfg.seed);
    if (cfg.approx.m < 2 * cfg.approx.l + 1) {
        err << "monospline: warning: m < 2l+1, prop3_bound column omitted\n";
    }
    const Interval inner = inner_interval(f.domain, cfg.inner_fraction);
    const ConvergenceReport report =
        run_convergence(f, parts, cfg.approx, inner, cfg.workers, std::string(to_string(cfg.partition)));

    prepare_out_dir(cfg);
    if (cfg.write_csv) write_file(out_path(cfg, "report.csv"), report_to_csv(report));
    if (cfg.write_json) write_file(out_path(cfg, "report.json"), report_to_json(report));
    write_file(out_path(cfg, "error_curve.csv"), error_curve_csv(report, f));

    out << kReportCsvHeader << '\n';
    const std::string csv = report_to_csv(report);
    out << csv.substr(csv.find('\n') + 1);

    if (auto bad = first_invariant_violation(report)) {
        err << "monospline: invariant violated: " << row_text(report.rows[*bad]) << '\n';
        return kExitInvariant;
    }
    for (const auto& r : report.rows) {
        if (!r.converged) {
            err << "monospline: solver did not converge: " << row_text(r) << '\n';
            return kExitSolver;
        }
    }
    return kExitOk;
}

int cmd_check_markov(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.validate();
    bool ok = true;
    for (const auto& s : markov_lemma_suite(cfg.seed, cfg.trials)) {
        out << "lemma m=" << s.m << " passed " << s.passed << "/" << s.trials
            << " worst_slack=" << format_number(s.worst_slack)
            << " worst_relative_slack=" << format_number(s.worst_relative_slack) << '\n';
        if (s.passed != s.trials) {
            ok = false;
            err << "monospline: lemma violated by P=" << join(s.worst_polynomial) << " on ["
                << format_number(s.worst_interval.lo) << ", " << format_number(s.worst_interval.hi) << "]\n";
        }
    }
    const MarkovInequalitySummary ineq = markov_inequality_suite(cfg.seed, cfg.trials);
    out << "inequality passed " << ineq.passed << "/" << ineq.trials
        << " worst_ratio=" << format_number(ineq.worst_ratio) << '\n';
    if (ineq.passed != ineq.trials) {
        ok = false;
        err << "monospline: Markov inequality violated by Q=" << join(ineq.worst_polynomial) << '\n';
    }
    return ok ? kExitOk : kExitInvariant;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.validate();
    std::vector<int> n_values;
    for (int n = 1; n <= cfg.n_max; ++n) n_values.push_back(n);
    const auto rows = counterexample_xn(n_values, cfg.approx.p);
    const std::string csv = counterexample_csv(rows);
    if (cfg.write_csv) {
        prepare_out_dir(cfg);
        write_file(out_path(cfg, "counterexample.csv"), csv);
    }
    out << csv;
    for (size_t i = 0; i < rows.size(); ++i) {
        const bool sup_one = std::abs(rows[i].sup_norm - 1.0) <= 1e-9;
        const bool decreasing = i == 0 || rows[i].lp_norm < rows[i - 1].lp_norm;
        if (!sup_one || !decreasing) {
            err << "monospline: counterexample row n=" << rows[i].n << " breaks the expected pattern\n";
            return kExitInvariant;
        }
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Best L^p approximation by nondecreasing splines", "monospline"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::optional<double> p;
    std::optional<int> workers;
    std::string partition = "uniform";
    std::vector<std::string> formats;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", p, "L^p exponent (>= 1)");
        sub->add_option("--seed", cfg.seed, "Seed for random partitions and suites");
        sub->add_option("--out-dir", cfg.out_dir, "Directory for artifacts");
        sub->add_option("--format", formats, "Report formats: csv, json")->delimiter(',');
    };
    auto fitting = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("--function", cfg.function_id, "Builtin function id");
        sub->add_option("--input-csv", cfg.input_csv, "CSV of x,y samples (piecewise-linear target)");
        sub->add_option("--a", cfg.a, "Left end of the interval");
        sub->add_option("--b", cfg.b, "Right end of the interval");
        sub->add_option("--m", cfg.approx.m, "Polynomial order");
        sub->add_option("--l", cfg.approx.l, "Smoothness");
        sub->add_option("--partition", partition, "uniform, chebyshev or random");
        sub->add_option("--sizes", cfg.sizes, "Knot counts, comma separated")->delimiter(',');
        sub->add_option("--inner-fraction", cfg.inner_fraction, "Inner interval as a fraction of [a, b]");
        sub->add_option("--workers", workers, "Concurrent projections (default $MONOSPLINE_WORKERS or 1)");
        sub->add_option("--tol", cfg.approx.solver_tolerance, "Solver tolerance");
        sub->add_option("--elevation", cfg.approx.elevation_budget, "Bernstein elevation budget");
        sub->add_option("--max-iterations", cfg.approx.max_iterations, "Solver iteration limit");
        sub->add_option("--quadrature-points", cfg.approx.quadrature_points_per_piece, "Gauss nodes per piece");
    };

    CLI::App* approx = app.add_subcommand("approx", "Fit one partition and write the spline");
    fitting(approx);
    CLI::App* converge = app.add_subcommand("converge", "Convergence report over a partition sequence");
    fitting(converge);
    CLI::App* markov = app.add_subcommand("check-markov", "Randomized Markov-type inequality suites");
    common(markov);
    markov->add_option("--trials", cfg.trials, "Polynomials per degree");
    CLI::App* counter = app.add_subcommand("counterexample", "Norms of x^n on [0, 1]");
    common(counter);
    counter->add_option("--n-max", cfg.n_max, "Largest exponent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "monospline: error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        cfg.approx.p = p.value_or(cfg.command == "counterexample" ? 1.0 : 2.0);
        cfg.partition = parse_partition_kind(partition);
        cfg.workers = workers ? *workers : workers_from_env();
        if (!formats.empty()) {
            cfg.write_csv = cfg.write_json = false;
            for (const auto& fmt : formats) {
                if (fmt == "csv") {
                    cfg.write_csv = true;
                } else if (fmt == "json") {
                    cfg.write_json = true;
                } else {
                    throw ConfigInvalid("--format accepts csv and json, got '" + fmt + "'");
                }
            }
        }
        if (cfg.command == "approx") return cmd_approx(cfg, out, err);
        if (cfg.command == "converge") return cmd_converge(cfg, out, err);
        if (cfg.command == "check-markov") return cmd_check_markov(cfg, out, err);
        return cmd_counterexample(cfg, out, err);
    } catch (const NotMonotone& e) {
        err << "monospline: solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const Error& e) {
        err << "monospline: error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "monospline: internal error: " << e.what() << '\n';
        return kExitSolver;
    }
}

}  // namespace monospline
