#include "hestonlab/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hestonlab/error.hpp"

namespace hestonlab {
namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw HestonError(ErrorCode::LengthMismatch,
                          std::string(what) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
    }
}

}  // namespace

std::vector<double> simulate_y(const ModelParams& params, const TimeGrid& grid, Scheme scheme,
                               const GaussianDraws& draws) {
    check_scheme(params, scheme);
    const std::size_t n = grid.steps();
    require_length(draws.eta.size(), n, "eta draws");
    const double dt = grid.dt();

    std::vector<double> y(n + 1);
    y[0] = params.y0();

    if (works_on_square_root(scheme)) {
        double z = std::sqrt(params.y0());
        for (std::size_t k = 1; k <= n; ++k) {
            z = scheme == Scheme::DESRE ? step_desre(params, z, dt, draws.eta[k - 1])
                                        : step_disre(params, z, dt, draws.eta[k - 1]);
            if (!(z > 0.0)) {
                throw HestonError(ErrorCode::NonPositiveZ, "square-root iterate reached " + std::to_string(z) +
                                                               " at step " + std::to_string(k));
            }
            y[k] = z * z;
        }
        return y;
    }

    for (std::size_t k = 1; k <= n; ++k) {
        const double prev = y[k - 1];
        const double eta = draws.eta[k - 1];
        switch (scheme) {
            case Scheme::AVE: y[k] = step_ave(params, prev, dt, eta); break;
            case Scheme::TE: y[k] = step_te(params, prev, dt, eta); break;
            default: y[k] = step_se(params, prev, dt, eta); break;
        }
    }
    return y;
}

std::vector<double> simulate_x(const ModelParams& params, const TimeGrid& grid, std::span<const double> y_path,
                               const GaussianDraws& draws) {
    const std::size_t n = grid.steps();
    require_length(y_path.size(), n + 1, "y path");
    require_length(draws.eta.size(), n, "eta draws");
    require_length(draws.zeta.size(), n, "zeta draws");

    const double dt = grid.dt();
    const double sqrt_dt = std::sqrt(dt);
    const double rho = params.rho();
    const double rho_c = std::sqrt(1.0 - rho * rho);

    std::vector<double> x(n + 1);
    x[0] = params.x0();
    for (std::size_t k = 1; k <= n; ++k) {
        const double y_prev = y_path[k - 1];
        const double noise = rho * draws.eta[k - 1] + rho_c * draws.zeta[k - 1];
        x[k] = x[k - 1] + (params.alpha() - params.beta() * y_prev) * dt +
               params.sigma2() * std::sqrt(std::max(y_prev, 0.0)) * sqrt_dt * noise;
    }
    return x;
}

XYPath simulate_xy(const ModelParams& params, const TimeGrid& grid, Scheme scheme, const SeedLineage& lineage) {
    const GaussianDraws draws = make_draws(lineage, grid.steps());
    XYPath path{grid, simulate_y(params, grid, scheme, draws), {}, scheme};
    path.x = simulate_x(params, grid, path.y, draws);
    return path;
}

}  // namespace hestonlab
