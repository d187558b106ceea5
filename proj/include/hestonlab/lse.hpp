#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "hestonlab/simulate.hpp"

namespace hestonlab {

using DriftVector = std::array<double, 4>;  // ordered (a, b, alpha, beta)

// Left-endpoint sums of a grid path. With y_k = y[k], k = 0..N:
//   i1 = sum y_{k-1} dt          i2 = sum y_{k-1}^2 dt
//   i3 = sum y_{k-1} (y_k - y_{k-1})
//   i4 = sum y_{k-1} (x_k - x_{k-1})
//   e_i = (1/T) sum y_{k-1}^i dt  (i = 1, 2, 3)
//   qv_y = sum (y_k - y_{k-1})^2
//   denom = T i2 - i1^2
struct PathFunctionals {
    double y_0 = 0.0;
    double x_0 = 0.0;
    double y_T = 0.0;
    double x_T = 0.0;
    double horizon = 0.0;
    std::size_t steps = 0;
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double i4 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double qv_y = 0.0;
    double denom = 0.0;
};

struct LseEstimate {
    double a_hat = 0.0;
    double b_hat = 0.0;
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    PathFunctionals functionals;
    double horizon = 0.0;

    DriftVector theta() const noexcept { return {a_hat, b_hat, alpha_hat, beta_hat}; }
};

// Throws PathTooShort below two samples, LengthMismatch if y and x differ.
// denom is accumulated from centred values, so a constant regressor gives
// (numerically) zero.
PathFunctionals path_functionals(const XYPath& path);

// True when denom <= 1e-14 max(1, T i2): the regressor column is constant.
bool is_degenerate(const PathFunctionals& f) noexcept;

// Normal-equation solutions of the discrete least-squares problem with
// observation frequency n = 1/dt. Both throw DegeneratePath when all
// regressor values coincide and PathTooShort below three samples.
std::array<double, 2> lse_discrete_ab(std::span<const double> y, double dt);
std::array<double, 2> lse_discrete_alphabeta(std::span<const double> y, std::span<const double> x, double dt);

// Plug-in estimator built from the path functionals.
LseEstimate lse_from_functionals(const PathFunctionals& f);

// Sum of squared residuals of the Y and X increments at a candidate
// (a, b, alpha, beta).
double ls_objective(const DriftVector& candidate, std::span<const double> y, std::span<const double> x, double dt);

struct ItoDiagnostic {
    double i3_direct = 0.0;  // left-endpoint sum
    double i3_ito = 0.0;     // (y_T^2 - y_0^2 - sigma1^2 i1) / 2
    double qv_ratio = 0.0;   // qv_y / (sigma1^2 i1), near 1 when sigma1 matches the path
};

ItoDiagnostic ito_cross_check(const PathFunctionals& f, double sigma1) noexcept;

// sqrt(T) (theta_hat - theta).
DriftVector normalized_error(const LseEstimate& est, const DriftVector& truth) noexcept;

struct ScalingStatistic {
    DriftVector values{};
};

// Path-dependent standardization whose limit law is N(0, S (x) I2):
//   e1^(-1/2) (I2 (x) [[(e2 - e1^2)(e1 e3 - e2^2)^(-1/2), 0], [-1, e1]]) sqrt(T) (theta_hat - theta)
// Throws DegeneratePath if denom is degenerate and
// NonPositiveScalingDiscriminant unless e1 > 0 and e1 e3 > e2^2.
ScalingStatistic random_scaling_transform(const LseEstimate& est, const DriftVector& truth,
                                          const PathFunctionals& f);

}  // namespace hestonlab
