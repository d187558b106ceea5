#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hestonlab/model.hpp"
#include "hestonlab/random.hpp"
#include "hestonlab/schemes.hpp"

namespace hestonlab {

// Samples of (Y, X) on the grid points t_0..t_N. The scheme is empty for
// paths imported from a file.
struct XYPath {
    TimeGrid grid;
    std::vector<double> y;
    std::vector<double> x;
    std::optional<Scheme> scheme;
};

// Y_0 = y0 followed by N scheme steps. DESRE and DISRE iterate Z = sqrt(Y)
// from sqrt(y0) and return Z^2. Throws LengthMismatch if draws.eta has
// fewer or more than N entries; NonPositiveZ if DESRE crosses zero.
std::vector<double> simulate_y(const ModelParams& params, const TimeGrid& grid, Scheme scheme,
                               const GaussianDraws& draws);

// Euler-Maruyama for X driven by rho eta + sqrt(1 - rho^2) zeta. The
// diffusion uses sqrt(max(Y, 0)) so AVE/TE paths stay usable.
std::vector<double> simulate_x(const ModelParams& params, const TimeGrid& grid, std::span<const double> y_path,
                               const GaussianDraws& draws);

XYPath simulate_xy(const ModelParams& params, const TimeGrid& grid, Scheme scheme, const SeedLineage& lineage);

}  // namespace hestonlab
