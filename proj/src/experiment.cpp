#include "hestonlab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "hestonlab/simulate.hpp"

namespace hestonlab {

ExperimentConfig ExperimentConfig::create(const ParamSet& raw, double horizon, std::size_t steps, Scheme scheme,
                                          std::size_t replicates, std::uint64_t master_seed,
                                          OutputSelection outputs) {
    ModelParams params = validate_params(raw);
    TimeGrid grid = TimeGrid::create(horizon, steps);
    check_scheme(params, scheme);
    if (replicates < 1) throw HestonError(ErrorCode::InvalidArgument, "replicates must be >= 1");
    return ExperimentConfig{params, grid, scheme, replicates, master_seed, outputs};
}

std::optional<Preset> parse_preset(std::string_view name) noexcept {
    if (name == "table1") return Preset::Table1;
    if (name == "paper") return Preset::Paper;
    if (name == "desk") return Preset::Desk;
    return std::nullopt;
}

std::string_view to_string(Preset preset) noexcept {
    switch (preset) {
        case Preset::Table1: return "table1";
        case Preset::Paper: return "paper";
        case Preset::Desk: return "desk";
    }
    return "unknown";
}

ExperimentConfig preset_config(Preset preset) {
    constexpr std::uint64_t seed = 20130917;
    const ParamSet raw = reference_param_set();
    switch (preset) {
        case Preset::Table1: return ExperimentConfig::create(raw, 3000.0, 30000, Scheme::DISRE, 10000, seed);
        case Preset::Paper: return ExperimentConfig::create(raw, 5000.0, 50000, Scheme::DISRE, 10000, seed);
        case Preset::Desk: break;
    }
    return ExperimentConfig::create(raw, 2000.0, 20000, Scheme::DISRE, 2000, seed);
}

ReplicateResult evaluate_replicate(const ModelParams& truth, std::size_t index, const PathFunctionals& f) {
    ReplicateResult r;
    r.index = index;
    r.estimate = lse_from_functionals(f);
    r.normalized = normalized_error(r.estimate, truth.drift());
    r.scaled = random_scaling_transform(r.estimate, truth.drift(), f);
    r.y_T = f.y_T;
    r.x_T = f.x_T;
    return r;
}

ReplicateResult run_replicate(const ExperimentConfig& config, std::size_t index) {
    const XYPath path = simulate_xy(config.params, config.grid, config.scheme,
                                    SeedLineage{config.master_seed, static_cast<std::uint64_t>(index)});
    return evaluate_replicate(config.params, index, path_functionals(path));
}

ReplicateRun run_replicates(const ExperimentConfig& config, unsigned threads) {
    const std::size_t total = config.replicates;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

    std::vector<std::optional<ReplicateResult>> slots(total);
    std::vector<ReplicateFailure> failures;
    std::mutex failure_mutex;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            try {
                slots[i] = run_replicate(config, i);
            } catch (const HestonError& e) {
                switch (e.code()) {
                    case ErrorCode::NonPositiveZ:
                    case ErrorCode::DegeneratePath:
                    case ErrorCode::NonPositiveScalingDiscriminant: {
                        std::lock_guard lock(failure_mutex);
                        failures.push_back({i, e.code(), e.what()});
                        break;
                    }
                    default: throw;
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    next.store(total);
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    ReplicateRun run;
    run.results.reserve(total);
    for (auto& slot : slots) {
        if (slot) run.results.push_back(std::move(*slot));
    }
    std::sort(failures.begin(), failures.end(),
              [](const ReplicateFailure& l, const ReplicateFailure& r) { return l.index < r.index; });
    run.failures = std::move(failures);
    if (run.results.empty()) {
        throw HestonError(ErrorCode::AllReplicatesFailed,
                          "all " + std::to_string(total) + " replicates failed");
    }
    return run;
}

}  // namespace hestonlab
