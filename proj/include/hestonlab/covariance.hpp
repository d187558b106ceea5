#pragma once

#include "hestonlab/matrix.hpp"
#include "hestonlab/model.hpp"

namespace hestonlab {

// Limit covariance of sqrt(T) (a_hat - a, b_hat - b, alpha_hat - alpha,
// beta_hat - beta) in the subcritical regime: sigma_matrix = S (x) M.
struct AsymptoticCovariance {
    Mat4 sigma_matrix;
    Mat2 s_matrix;  // [[s1^2, rho s1 s2], [rho s1 s2, s2^2]]
    Mat2 m_matrix;  // CIR factor, depends on (a, b, sigma1) only
};

// Noise matrix S of the driving Brownian pair, scaled by the volatilities.
Mat2 noise_matrix(const ModelParams& params) noexcept;

// Closed-form route. Throws NotSubcritical when b <= 0.
AsymptoticCovariance asymptotic_covariance(const ModelParams& params);

// Second route: (I2 (x) C^-1)(S (x) V)(I2 (x) C^-1) with C = [[1, -m1], [-m1, m2]]
// and V = [[m1, -m2], [-m2, m3]] built from the stationary moments.
AsymptoticCovariance covariance_sandwich(const ModelParams& params);

// Limit covariance of the randomly scaled statistic: S (x) I2.
Mat4 scaling_limit_covariance(const ModelParams& params) noexcept;

}  // namespace hestonlab
