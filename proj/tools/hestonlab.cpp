// hestonlab: simulate Heston paths, estimate drift parameters, run and
// re-analyze Monte Carlo experiments.
//
//   hestonlab simulate [--preset P | --config FILE] [--set k=v]... [--out DIR]
//   hestonlab estimate --path CSV [--preset P | --config FILE] [--set k=v]... [--out DIR]
//   hestonlab mc       [--preset P | --config FILE] [--set k=v]... [--out DIR] [--threads K]
//   hestonlab report   [--preset P | --config FILE] [--set k=v]... [--out DIR] [--in DIR]

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hestonlab/config.hpp"
#include "hestonlab/error.hpp"
#include "hestonlab/experiment.hpp"
#include "hestonlab/lse.hpp"
#include "hestonlab/path_io.hpp"
#include "hestonlab/report.hpp"
#include "hestonlab/simulate.hpp"
#include "hestonlab/text.hpp"

namespace fs = std::filesystem;
using namespace hestonlab;

namespace {

struct CommonOptions {
    std::string config_path;
    std::string preset;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    unsigned threads = 0;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--config", opts.config_path, "Experiment file (flat key = value)")->check(CLI::ExistingFile);
    cmd.add_option("--preset", opts.preset, "Base configuration")
        ->check(CLI::IsMember({"table1", "paper", "desk"}));
    cmd.add_option("--set", opts.overrides, "Override one key, e.g. --set T=500 (repeatable)");
    cmd.add_option("--out", opts.out_dir, "Output directory");
    cmd.add_option("--threads", opts.threads, "Worker threads (0 = all cores); results do not depend on it");
}

bool has_explicit_config(const CommonOptions& opts) {
    return !opts.config_path.empty() || !opts.preset.empty() || !opts.overrides.empty();
}

// preset < config file < --set. A config file without --preset must be complete.
ExperimentConfig resolve_config(const CommonOptions& opts) {
    if (!opts.config_path.empty() && opts.preset.empty()) return parse_config(opts.config_path, opts.overrides);

    const Preset preset = opts.preset.empty() ? Preset::Desk : *parse_preset(opts.preset);
    ConfigValues values = config_values(preset_config(preset));
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw HestonError(ErrorCode::IoError, "cannot open config " + opts.config_path);
        for (auto& [key, value] : read_config_values(in)) values[key] = value;
    }
    apply_overrides(values, opts.overrides);
    return build_config(values);
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw HestonError(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

int cmd_simulate(const CommonOptions& opts) {
    const ExperimentConfig config = resolve_config(opts);
    ensure_dir(opts.out_dir);
    for (std::size_t r = 0; r < config.replicates; ++r) {
        const XYPath path = simulate_xy(config.params, config.grid, config.scheme, SeedLineage{config.master_seed, r});
        const fs::path file =
            fs::path(opts.out_dir) / ("path_seed" + std::to_string(config.master_seed) + "_rep" + std::to_string(r) + ".csv");
        write_path_csv(file, path);
        std::cout << file.string() << '\n';
    }
    return 0;
}

int cmd_estimate(const CommonOptions& opts, const std::string& path_csv, bool out_given) {
    const ExperimentConfig config = resolve_config(opts);
    const XYPath path = read_path_csv(fs::path(path_csv));
    const PathFunctionals f = path_functionals(path);
    const LseEstimate est = lse_from_functionals(f);
    const ItoDiagnostic ito = ito_cross_check(f, config.params.sigma1());
    const bool known = has_explicit_config(opts);

    std::ostringstream record;
    record << "a_hat=" << format_double(est.a_hat) << '\n'
           << "b_hat=" << format_double(est.b_hat) << '\n'
           << "alpha_hat=" << format_double(est.alpha_hat) << '\n'
           << "beta_hat=" << format_double(est.beta_hat) << '\n'
           << "T=" << format_double(f.horizon) << '\n'
           << "N=" << f.steps << '\n'
           << "scheme=" << (known ? std::string(to_string(config.scheme)) : "unknown") << '\n'
           << "seed=" << (known ? std::to_string(config.master_seed) : "unknown") << '\n'
           << "i3_direct=" << format_double(ito.i3_direct) << '\n'
           << "i3_ito=" << format_double(ito.i3_ito) << '\n'
           << "qv_ratio=" << format_double(ito.qv_ratio) << '\n';
    std::cout << record.str();

    if (out_given) {
        ensure_dir(opts.out_dir);
        const fs::path file = fs::path(opts.out_dir) / "estimate.txt";
        std::ofstream out(file, std::ios::binary);
        out << record.str();
        if (!out) throw HestonError(ErrorCode::IoError, "write failed for " + file.string());
    }
    return 0;
}

void print_summary(const ExperimentReport& report) {
    const McSummary& s = report.summary;
    std::cout << "replicates: " << report.run.results.size() << " ok, " << report.run.failures.size()
              << " failed\n"
              << "mean Y_T: " << format_double(s.empirical_mean_yT) << '\n'
              << "mean X_T/T: " << format_double(s.empirical_mean_xT_over_T) << '\n';
    for (std::size_t i = 0; i < 4; ++i) {
        const ParameterSummary& p = s.parameters[i];
        std::cout << kParameterNames[i] << ": bias " << format_double(p.expected_bias) << ", var(normalized) "
                  << format_double(s.sample_cov_normalized(i, i));
        if (report.theory) std::cout << " (limit " << format_double(report.theory->sigma_matrix(i, i)) << ")";
        std::cout << '\n';
    }
    if (s.low_confidence) {
        std::cout << "covariance: low confidence (" << s.count << " < " << kCovarianceMinReplicates
                  << " replicates), deviation report skipped\n";
    }
}

int cmd_mc(const CommonOptions& opts) {
    const ExperimentConfig config = resolve_config(opts);
    const auto start = std::chrono::steady_clock::now();
    ReplicateRun run = run_replicates(config, opts.threads);
    const ExperimentReport report = analyze(config, std::move(run));
    const auto files = write_report(opts.out_dir, report);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print_summary(report);
    for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
    std::cout << "elapsed: " << format_double(seconds) << " s\n";
    return 0;
}

int cmd_report(const CommonOptions& opts, const std::string& in_dir) {
    const ExperimentConfig config = resolve_config(opts);
    const fs::path source = in_dir.empty() ? fs::path(opts.out_dir) : fs::path(in_dir);
    const ExperimentReport report = analyze(config, load_run(source, config));
    const auto files = write_report(opts.out_dir, report);
    print_summary(report);
    for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heston model drift estimation laboratory"};
    app.require_subcommand(1);

    CommonOptions sim_opts, est_opts, mc_opts, rep_opts;
    std::string path_csv;
    std::string in_dir;

    auto* simulate = app.add_subcommand("simulate", "Write simulated (t, y, x) paths as CSV");
    add_common(*simulate, sim_opts);

    auto* estimate = app.add_subcommand("estimate", "Least-squares drift estimates from a path CSV");
    add_common(*estimate, est_opts);
    estimate->add_option("--path", path_csv, "Path CSV with header t,y,x")->required()->check(CLI::ExistingFile);

    auto* mc = app.add_subcommand("mc", "Run a Monte Carlo experiment and write the report");
    add_common(*mc, mc_opts);

    auto* report = app.add_subcommand("report", "Rebuild the report from stored replicates");
    add_common(*report, rep_opts);
    report->add_option("--in", in_dir, "Directory holding replicates.csv (default: --out)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(sim_opts);
        if (estimate->parsed()) return cmd_estimate(est_opts, path_csv, estimate->count("--out") > 0);
        if (mc->parsed()) return cmd_mc(mc_opts);
        if (report->parsed()) return cmd_report(rep_opts, in_dir);
    } catch (const HestonError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
