#include "hestonlab/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hestonlab/error.hpp"
#include "hestonlab/text.hpp"

namespace hestonlab {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* const kReplicateHeader =
    "index,y_0,x_0,y_T,x_T,T,N,i1,i2,i3,i4,e1,e2,e3,qv_y,denom,a_hat,b_hat,alpha_hat,beta_hat";

json matrix_json(const Mat4& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < 4; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json config_json(const ExperimentConfig& c) {
    const ParamSet& p = c.params.raw();
    return json{
        {"a", p.a}, {"b", p.b}, {"alpha", p.alpha}, {"beta", p.beta}, {"sigma1", p.sigma1},
        {"sigma2", p.sigma2}, {"rho", p.rho}, {"y0", p.y0}, {"x0", p.x0}, {"T", c.grid.horizon()},
        {"N", c.grid.steps()}, {"scheme", to_string(c.scheme)}, {"replicates", c.replicates},
        {"seed", c.master_seed}, {"outputs", config_values(c).at("outputs")},
    };
}

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw HestonError(ErrorCode::IoError, "cannot open " + file.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) throw HestonError(ErrorCode::IoError, "write failed for " + file.string());
}

double limit_x_slope(const ModelParams& p) {
    return p.b() > 0.0 ? p.alpha() - p.beta() * p.a() / p.b() : kNaN;
}

}  // namespace

ExperimentReport analyze(const ExperimentConfig& config, ReplicateRun run) {
    McSummary summary = summarize(run.results, config.params.drift());
    ExperimentReport report{config, std::move(run), summary, std::nullopt, std::nullopt};
    if (classify_regime(config.params) == Regime::Subcritical) {
        report.theory = asymptotic_covariance(config.params);
        if (!summary.low_confidence) report.deviation = covariance_check(summary, *report.theory);
    }
    return report;
}

std::string report_json(const ExperimentReport& report) {
    const McSummary& s = report.summary;
    json params = json::object();
    for (std::size_t p = 0; p < 4; ++p) {
        const ParameterSummary& ps = s.parameters[p];
        params[std::string(kParameterNames[p])] = json{
            {"expected_bias", ps.expected_bias},
            {"l1_error", ps.l1_error},
            {"l2_error", ps.l2_error},
            {"relative_error_of_mean_estimate", ps.relative_error_of_mean_estimate},
            {"skewness", ps.skewness},
            {"excess_kurtosis", ps.excess_kurtosis},
            {"ad_stat", ps.ad_stat},
            {"ad_pvalue", ps.ad_pvalue},
            {"jb_stat", ps.jb_stat},
            {"jb_pvalue", ps.jb_pvalue},
        };
    }

    json failures = json::array();
    for (const auto& f : report.run.failures) {
        failures.push_back(json{{"index", f.index}, {"code", to_string(f.code)}, {"message", f.message}});
    }

    json doc;
    doc["config"] = config_json(report.config);
    doc["regime"] = to_string(classify_regime(report.config.params));
    doc["replicates"] = json{{"requested", report.config.replicates},
                             {"succeeded", report.run.results.size()},
                             {"failed", report.run.failures.size()},
                             {"failures", failures}};
    doc["summary"] = json{
        {"count", s.count},
        {"low_confidence", s.low_confidence},
        {"empirical_mean_yT", s.empirical_mean_yT},
        {"empirical_mean_xT_over_T", s.empirical_mean_xT_over_T},
        {"parameters", params},
        {"sample_cov_normalized", matrix_json(s.sample_cov_normalized)},
        {"sample_cov_scaled", matrix_json(s.sample_cov_scaled)},
    };
    if (report.theory) {
        const ModelParams& p = report.config.params;
        doc["theory"] = json{
            {"mean_y_limit", p.a() / p.b()},
            {"x_slope_limit", limit_x_slope(p)},
            {"sigma_matrix", matrix_json(report.theory->sigma_matrix)},
            {"scaling_limit", matrix_json(kron(report.theory->s_matrix, Mat2::identity()))},
        };
    } else {
        doc["theory"] = nullptr;
    }
    if (report.deviation) {
        doc["deviation"] = json{
            {"normalized", matrix_json(report.deviation->normalized)},
            {"scaled", matrix_json(report.deviation->scaled)},
            {"max_abs_normalized", report.deviation->max_abs_normalized},
            {"max_abs_scaled", report.deviation->max_abs_scaled},
        };
    } else {
        doc["deviation"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_report(const std::filesystem::path& dir, const ExperimentReport& report) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw HestonError(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

    const OutputSelection& sel = report.config.outputs;
    const McSummary& s = report.summary;
    const ModelParams& p = report.config.params;
    std::vector<std::filesystem::path> written;

    auto emit = [&](const std::string& name, const std::string& body) {
        const auto file = dir / name;
        auto out = open_out(file);
        out << body;
        finish(out, file);
        written.push_back(file);
    };

    if (sel.json) emit("report.json", report_json(report));

    if (sel.tables) {
        const double mean_limit = p.b() > 0.0 ? p.a() / p.b() : kNaN;
        std::ostringstream t1, t2, t3, t4, t5;
        t1 << "quantity,limit," << to_string(report.config.scheme) << '\n'
           << "mean_Y_T," << format_double(mean_limit) << ',' << format_double(s.empirical_mean_yT) << '\n'
           << "mean_X_T_over_T," << format_double(limit_x_slope(p)) << ','
           << format_double(s.empirical_mean_xT_over_T) << '\n';
        t2 << "parameter,expected_bias,l1_error,l2_error\n";
        t3 << "parameter,relative_error\n";
        t4 << "parameter,skewness,excess_kurtosis\n";
        t5 << "parameter,ad_stat,ad_pvalue,jb_stat,jb_pvalue\n";
        for (std::size_t i = 0; i < 4; ++i) {
            const ParameterSummary& ps = s.parameters[i];
            const std::string name(kParameterNames[i]);
            t2 << name << ',' << format_double(ps.expected_bias) << ',' << format_double(ps.l1_error) << ','
               << format_double(ps.l2_error) << '\n';
            t3 << name << ',' << format_double(ps.relative_error_of_mean_estimate) << '\n';
            t4 << name << ',' << format_double(ps.skewness) << ',' << format_double(ps.excess_kurtosis) << '\n';
            t5 << name << ',' << format_double(ps.ad_stat) << ',' << format_double(ps.ad_pvalue) << ','
               << format_double(ps.jb_stat) << ',' << format_double(ps.jb_pvalue) << '\n';
        }
        emit("table1.csv", t1.str());
        emit("table2.csv", t2.str());
        emit("table3.csv", t3.str());
        emit("table4.csv", t4.str());
        emit("table5.csv", t5.str());
    }

    if (sel.figures && report.theory) {
        std::vector<double> column(report.run.results.size());
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t r = 0; r < column.size(); ++r) column[r] = report.run.results[r].normalized[i];
            const Histogram h = histogram_overlay(column, report.theory->sigma_matrix(i, i));
            std::ostringstream fig;
            fig << "bin_center,density,overlay_density\n";
            for (std::size_t b = 0; b < h.centers.size(); ++b) {
                fig << format_double(h.centers[b]) << ',' << format_double(h.density[b]) << ','
                    << format_double(h.overlay_density[b]) << '\n';
            }
            emit("fig1_" + std::string(kParameterNames[i]) + ".csv", fig.str());
        }
    }

    if (sel.replicates) {
        std::ostringstream reps, fails;
        write_replicates_csv(reps, report.run.results);
        write_failures_csv(fails, report.run.failures);
        emit("replicates.csv", reps.str());
        emit("failures.csv", fails.str());
    }
    return written;
}

void write_replicates_csv(std::ostream& out, const std::vector<ReplicateResult>& results) {
    out << kReplicateHeader << '\n';
    for (const auto& r : results) {
        const PathFunctionals& f = r.estimate.functionals;
        const double fields[] = {f.y_0, f.x_0, f.y_T, f.x_T, f.horizon};
        out << r.index;
        for (double v : fields) out << ',' << format_double(v);
        out << ',' << f.steps;
        for (double v : {f.i1, f.i2, f.i3, f.i4, f.e1, f.e2, f.e3, f.qv_y, f.denom, r.estimate.a_hat,
                         r.estimate.b_hat, r.estimate.alpha_hat, r.estimate.beta_hat}) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
}

std::vector<StoredReplicate> read_replicates_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kReplicateHeader) {
        throw HestonError(ErrorCode::CsvFormatError, "unexpected replicates header");
    }
    std::vector<StoredReplicate> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        const std::string where = "replicates line " + std::to_string(line_no);
        if (fields.size() != 20) throw HestonError(ErrorCode::CsvFormatError, where + ": expected 20 fields");
        const auto index = parse_integer(fields[0]);
        const auto steps = parse_integer(fields[6]);
        if (!index || *index < 0 || !steps || *steps < 1) {
            throw HestonError(ErrorCode::CsvFormatError, where + ": bad integer field");
        }
        std::array<double, 20> v{};
        for (std::size_t i = 1; i < 20; ++i) {
            if (i == 6) continue;
            const auto d = parse_double(fields[i]);
            if (!d) throw HestonError(ErrorCode::CsvFormatError, where + ": malformed number");
            v[i] = *d;
        }
        StoredReplicate s;
        s.index = static_cast<std::size_t>(*index);
        PathFunctionals& f = s.functionals;
        f.y_0 = v[1];
        f.x_0 = v[2];
        f.y_T = v[3];
        f.x_T = v[4];
        f.horizon = v[5];
        f.steps = static_cast<std::size_t>(*steps);
        f.i1 = v[7];
        f.i2 = v[8];
        f.i3 = v[9];
        f.i4 = v[10];
        f.e1 = v[11];
        f.e2 = v[12];
        f.e3 = v[13];
        f.qv_y = v[14];
        f.denom = v[15];
        out.push_back(s);
    }
    return out;
}

void write_failures_csv(std::ostream& out, const std::vector<ReplicateFailure>& failures) {
    out << "index,code,message\n";
    for (const auto& f : failures) {
        std::string message = f.message;
        for (char& c : message) {
            if (c == ',' || c == '\n' || c == '\r') c = ';';
        }
        out << f.index << ',' << to_string(f.code) << ',' << message << '\n';
    }
}

std::vector<ReplicateFailure> read_failures_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "index,code,message") {
        throw HestonError(ErrorCode::CsvFormatError, "unexpected failures header");
    }
    std::vector<ReplicateFailure> out;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto first = line.find(',');
        const auto second = first == std::string::npos ? first : line.find(',', first + 1);
        if (second == std::string::npos) throw HestonError(ErrorCode::CsvFormatError, "bad failures row");
        const auto index = parse_integer(std::string_view(line).substr(0, first));
        const std::string code(line.substr(first + 1, second - first - 1));
        if (!index || *index < 0) throw HestonError(ErrorCode::CsvFormatError, "bad failure index");
        ReplicateFailure f;
        f.index = static_cast<std::size_t>(*index);
        f.message = line.substr(second + 1);
        if (code == "NonPositiveZ") {
            f.code = ErrorCode::NonPositiveZ;
        } else if (code == "NonPositiveScalingDiscriminant") {
            f.code = ErrorCode::NonPositiveScalingDiscriminant;
        } else if (code == "DegeneratePath") {
            f.code = ErrorCode::DegeneratePath;
        } else {
            throw HestonError(ErrorCode::CsvFormatError, "unknown failure code '" + code + "'");
        }
        out.push_back(std::move(f));
    }
    return out;
}

ReplicateRun load_run(const std::filesystem::path& dir, const ExperimentConfig& config) {
    std::ifstream reps(dir / "replicates.csv", std::ios::binary);
    if (!reps) throw HestonError(ErrorCode::IoError, "cannot open " + (dir / "replicates.csv").string());

    ReplicateRun run;
    for (const StoredReplicate& s : read_replicates_csv(reps)) {
        run.results.push_back(evaluate_replicate(config.params, s.index, s.functionals));
    }
    if (std::ifstream fails(dir / "failures.csv", std::ios::binary); fails) {
        run.failures = read_failures_csv(fails);
    }
    if (run.results.empty()) throw HestonError(ErrorCode::AllReplicatesFailed, "stored run has no results");
    return run;
}

}  // namespace hestonlab
