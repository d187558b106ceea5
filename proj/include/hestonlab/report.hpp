#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hestonlab/config.hpp"
#include "hestonlab/covariance.hpp"
#include "hestonlab/experiment.hpp"
#include "hestonlab/summary.hpp"

namespace hestonlab {

struct ExperimentReport {
    ExperimentConfig config;
    ReplicateRun run;
    McSummary summary;
    // Present only in the subcritical regime.
    std::optional<AsymptoticCovariance> theory;
    // Present when the theory exists and there are >= 100 results.
    std::optional<CovarianceDeviation> deviation;
};

// Summarizes a run and compares it with the limit laws where they apply.
ExperimentReport analyze(const ExperimentConfig& config, ReplicateRun run);

std::string report_json(const ExperimentReport& report);

// Writes the blocks selected by config.outputs into `dir`:
//   json        report.json
//   tables      table1.csv .. table5.csv
//   figures     fig1_a.csv fig1_b.csv fig1_alpha.csv fig1_beta.csv
//   replicates  replicates.csv failures.csv
// Returns the files written.
std::vector<std::filesystem::path> write_report(const std::filesystem::path& dir, const ExperimentReport& report);

// Per-replicate path functionals, enough to rebuild every ReplicateResult
// without re-simulating.
struct StoredReplicate {
    std::size_t index = 0;
    PathFunctionals functionals;
};

void write_replicates_csv(std::ostream& out, const std::vector<ReplicateResult>& results);
std::vector<StoredReplicate> read_replicates_csv(std::istream& in);

void write_failures_csv(std::ostream& out, const std::vector<ReplicateFailure>& failures);
std::vector<ReplicateFailure> read_failures_csv(std::istream& in);

// Rebuilds the run stored in `dir` (replicates.csv and, if present,
// failures.csv) against the truth in `config`.
ReplicateRun load_run(const std::filesystem::path& dir, const ExperimentConfig& config);

}  // namespace hestonlab
