#include "hestonlab/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "hestonlab/error.hpp"

namespace hestonlab {
namespace {

void require_feller(const ModelParams& params) {
    if (!params.feller_strict()) {
        throw HestonError(ErrorCode::FellerViolated, "square-root Euler schemes require a > sigma1^2 / 2");
    }
}

}  // namespace

TimeGrid TimeGrid::create(double horizon, std::size_t steps) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw HestonError(ErrorCode::InvalidGrid, "horizon T must be positive and finite");
    }
    if (steps < 1) throw HestonError(ErrorCode::InvalidGrid, "step count N must be >= 1");
    return TimeGrid(horizon, steps);
}

std::string_view to_string(Scheme scheme) noexcept {
    switch (scheme) {
        case Scheme::AVE: return "AVE";
        case Scheme::TE: return "TE";
        case Scheme::SE: return "SE";
        case Scheme::DESRE: return "DESRE";
        case Scheme::DISRE: return "DISRE";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Scheme s : {Scheme::AVE, Scheme::TE, Scheme::SE, Scheme::DESRE, Scheme::DISRE}) {
        if (upper == to_string(s)) return s;
    }
    return std::nullopt;
}

bool works_on_square_root(Scheme scheme) noexcept { return scheme == Scheme::DESRE || scheme == Scheme::DISRE; }

void check_scheme(const ModelParams& params, Scheme scheme) {
    if (works_on_square_root(scheme)) require_feller(params);
}

double step_ave(const ModelParams& params, double y_prev, double dt, double eta) {
    return y_prev + (params.a() - params.b() * y_prev) * dt +
           params.sigma1() * std::sqrt(std::abs(y_prev)) * std::sqrt(dt) * eta;
}

double step_te(const ModelParams& params, double y_prev, double dt, double eta) {
    return y_prev + (params.a() - params.b() * y_prev) * dt +
           params.sigma1() * std::sqrt(std::max(y_prev, 0.0)) * std::sqrt(dt) * eta;
}

double step_se(const ModelParams& params, double y_prev, double dt, double eta) {
    if (y_prev < 0.0) throw HestonError(ErrorCode::NegativeInput, "symmetrized Euler needs y_prev >= 0");
    return std::abs(y_prev + (params.a() - params.b() * y_prev) * dt +
                    params.sigma1() * std::sqrt(y_prev) * std::sqrt(dt) * eta);
}

double step_desre(const ModelParams& params, double z_prev, double dt, double eta) {
    require_feller(params);
    if (!(z_prev > 0.0)) throw HestonError(ErrorCode::NonPositiveZ, "DESRE left the positive half-line");
    const double s2 = params.sigma1() * params.sigma1();
    const double drift = (0.5 * params.a() - 0.125 * s2) / z_prev - 0.5 * params.b() * z_prev;
    return z_prev + drift * dt + 0.5 * params.sigma1() * std::sqrt(dt) * eta;
}

// Positive root of (1 + b dt / 2) z^2 - u z - (a/2 - s1^2/8) dt = 0, where
// u = z_prev + (s1/2) sqrt(dt) eta. The constant term is negative under the
// Feller condition, so exactly one root is positive.
double step_disre(const ModelParams& params, double z_prev, double dt, double eta) {
    require_feller(params);
    const double s2 = params.sigma1() * params.sigma1();
    const double u = z_prev + 0.5 * params.sigma1() * std::sqrt(dt) * eta;
    const double denom = 2.0 + params.b() * dt;
    const double c = (params.a() - 0.25 * s2) * dt / denom;
    const double h = u / denom;
    if (h >= 0.0) return h + std::sqrt(h * h + c);
    // h + sqrt(h^2 + c) cancels when h < 0; use the product of roots instead.
    return c / (std::sqrt(h * h + c) - h);
}

}  // namespace hestonlab
