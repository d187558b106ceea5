#pragma once

#include <array>
#include <string_view>

namespace hestonlab {

// Unvalidated coefficient record, as read from a config file or built in code.
//
//   dY = (a - b Y) dt + sigma1 sqrt(Y) dW
//   dX = (alpha - beta Y) dt + sigma2 sqrt(Y) (rho dW + sqrt(1 - rho^2) dB)
struct ParamSet {
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double rho = 0.0;
    double y0 = 0.0;
    double x0 = 0.0;
};

// Validated Heston coefficients. Only obtainable through validate_params, so
// holding one implies a > 0, sigma1, sigma2 > 0, |rho| < 1, y0 > 0.
class ModelParams {
public:
    const ParamSet& raw() const noexcept { return values_; }

    double a() const noexcept { return values_.a; }
    double b() const noexcept { return values_.b; }
    double alpha() const noexcept { return values_.alpha; }
    double beta() const noexcept { return values_.beta; }
    double sigma1() const noexcept { return values_.sigma1; }
    double sigma2() const noexcept { return values_.sigma2; }
    double rho() const noexcept { return values_.rho; }
    double y0() const noexcept { return values_.y0; }
    double x0() const noexcept { return values_.x0; }

    // a > sigma1^2 / 2; the square-root transform schemes need it.
    bool feller_strict() const noexcept { return values_.a > 0.5 * values_.sigma1 * values_.sigma1; }

    // Drift parameters in the fixed (a, b, alpha, beta) order.
    std::array<double, 4> drift() const noexcept {
        return {values_.a, values_.b, values_.alpha, values_.beta};
    }

private:
    explicit ModelParams(const ParamSet& values) : values_(values) {}
    friend ModelParams validate_params(const ParamSet& raw);

    ParamSet values_;
};

// Throws HestonError with NonPositiveA, NonPositiveSigma, RhoOutOfRange,
// NonPositiveY0 or NonFiniteValue naming the first violated constraint.
ModelParams validate_params(const ParamSet& raw);

// The canonical coefficients of the numerical study: a=0.4, b=0.3,
// alpha=0.1, beta=0.15, sigma1=0.4, sigma2=0.3, rho=0.2, y0=0.2, x0=0.1.
ParamSet reference_param_set() noexcept;

enum class Regime { Subcritical, Critical, Supercritical };

std::string_view to_string(Regime regime) noexcept;

Regime classify_regime(const ModelParams& params) noexcept;

struct StationaryMoments {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double var = 0.0;    // m2 - m1^2
    double cross = 0.0;  // m1 m3 - m2^2
};

// Laplace transform E exp(-lambda Y_inf) of the stationary Gamma law.
double stationary_laplace(const ModelParams& params, double lambda);

// First three raw moments of Y_inf from their closed forms.
StationaryMoments stationary_moments(const ModelParams& params);

// E(Y_t | Y_s = y_s). The b == 0 branch is taken only on exact equality.
double conditional_mean_y(const ModelParams& params, double y_s, double s, double t);

// E(X_t | Y_s = y_s, X_s = x_s).
double conditional_mean_x(const ModelParams& params, double y_s, double x_s, double s, double t);

}  // namespace hestonlab
