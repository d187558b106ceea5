#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "hestonlab/model.hpp"

namespace hestonlab {

// Uniform grid t_k = k T / N, k = 0..N.
class TimeGrid {
public:
    // Throws InvalidGrid unless T > 0 is finite and N >= 1.
    static TimeGrid create(double horizon, std::size_t steps);

    double horizon() const noexcept { return horizon_; }
    std::size_t steps() const noexcept { return steps_; }
    double dt() const noexcept { return horizon_ / static_cast<double>(steps_); }
    double time(std::size_t k) const noexcept {
        if (k == steps_) return horizon_;
        return horizon_ * static_cast<double>(k) / static_cast<double>(steps_);
    }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

private:
    TimeGrid(double horizon, std::size_t steps) : horizon_(horizon), steps_(steps) {}

    double horizon_;
    std::size_t steps_;
};

// Discretizations of the CIR factor.
//   AVE   absolute value Euler
//   TE    truncated Euler
//   SE    symmetrized Euler
//   DESRE drift-explicit square-root Euler (runs on Z = sqrt(Y))
//   DISRE drift-implicit square-root Euler (runs on Z = sqrt(Y))
enum class Scheme { AVE, TE, SE, DESRE, DISRE };

std::string_view to_string(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

bool works_on_square_root(Scheme scheme) noexcept;

// Throws FellerViolated if the scheme needs a > sigma1^2 / 2 and it fails.
void check_scheme(const ModelParams& params, Scheme scheme);

// One-step kernels. eta is the standard normal increment driving W.
double step_ave(const ModelParams& params, double y_prev, double dt, double eta);
double step_te(const ModelParams& params, double y_prev, double dt, double eta);
double step_se(const ModelParams& params, double y_prev, double dt, double eta);
double step_desre(const ModelParams& params, double z_prev, double dt, double eta);
double step_disre(const ModelParams& params, double z_prev, double dt, double eta);

}  // namespace hestonlab
