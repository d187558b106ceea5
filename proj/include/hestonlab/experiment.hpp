#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "hestonlab/error.hpp"
#include "hestonlab/lse.hpp"
#include "hestonlab/model.hpp"
#include "hestonlab/schemes.hpp"

namespace hestonlab {

// Which report blocks an experiment writes.
struct OutputSelection {
    bool json = true;
    bool tables = true;
    bool figures = true;
    bool replicates = true;

    friend bool operator==(const OutputSelection&, const OutputSelection&) = default;
};

struct ExperimentConfig {
    ModelParams params;
    TimeGrid grid;
    Scheme scheme;
    std::size_t replicates;
    std::uint64_t master_seed;
    OutputSelection outputs;

    // Validates the coefficients, the grid, replicates >= 1 and the scheme's
    // Feller requirement.
    static ExperimentConfig create(const ParamSet& raw, double horizon, std::size_t steps, Scheme scheme,
                                   std::size_t replicates, std::uint64_t master_seed,
                                   OutputSelection outputs = {});
};

// table1: T = 3000, N = 30000, 10^4 replicates.
// paper:  T = 5000, N = 50000, 10^4 replicates.
// desk:   T = 2000, N = 20000, 2000 replicates; runs in minutes.
// All use the reference coefficients and the DISRE scheme.
enum class Preset { Table1, Paper, Desk };

std::optional<Preset> parse_preset(std::string_view name) noexcept;
std::string_view to_string(Preset preset) noexcept;
ExperimentConfig preset_config(Preset preset);

struct ReplicateResult {
    std::size_t index = 0;
    LseEstimate estimate;
    DriftVector normalized{};
    ScalingStatistic scaled;
    double y_T = 0.0;
    double x_T = 0.0;
};

struct ReplicateFailure {
    std::size_t index = 0;
    ErrorCode code = ErrorCode::DegeneratePath;
    std::string message;
};

// results and failures are sorted by replicate index;
// results.size() + failures.size() == config.replicates.
struct ReplicateRun {
    std::vector<ReplicateResult> results;
    std::vector<ReplicateFailure> failures;
};

// Estimation pipeline applied to one path's functionals.
ReplicateResult evaluate_replicate(const ModelParams& truth, std::size_t index, const PathFunctionals& f);

// Simulates replicate `index` of the experiment and evaluates it.
ReplicateResult run_replicate(const ExperimentConfig& config, std::size_t index);

// Fans the replicates out over `threads` workers (0 = hardware concurrency).
// Results do not depend on the thread count. Paths that fail with
// NonPositiveZ, DegeneratePath or NonPositiveScalingDiscriminant are
// recorded as failures; throws AllReplicatesFailed if nothing survives.
ReplicateRun run_replicates(const ExperimentConfig& config, unsigned threads = 0);

}  // namespace hestonlab
