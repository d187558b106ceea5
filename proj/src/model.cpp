#include "hestonlab/model.hpp"

#include <cmath>
#include <string>

#include "hestonlab/error.hpp"

namespace hestonlab {
namespace {

void require_subcritical(const ModelParams& params, const char* what) {
    if (!(params.b() > 0.0)) {
        throw HestonError(ErrorCode::NotSubcritical,
                          std::string(what) + " requires b > 0, got b = " + std::to_string(params.b()));
    }
}

// (1 - exp(-b tau)) / b, i.e. the integral of exp(-b u) over [0, tau].
double decay_integral(double b, double tau) {
    if (b == 0.0) return tau;
    return -std::expm1(-b * tau) / b;
}

}  // namespace

ModelParams validate_params(const ParamSet& raw) {
    const double fields[] = {raw.a, raw.b, raw.alpha, raw.beta, raw.sigma1, raw.sigma2, raw.rho, raw.y0, raw.x0};
    for (double v : fields) {
        if (!std::isfinite(v)) throw HestonError(ErrorCode::NonFiniteValue, "all coefficients must be finite");
    }
    if (!(raw.a > 0.0)) throw HestonError(ErrorCode::NonPositiveA, "a must be > 0, got " + std::to_string(raw.a));
    if (!(raw.sigma1 > 0.0)) {
        throw HestonError(ErrorCode::NonPositiveSigma, "sigma1 must be > 0, got " + std::to_string(raw.sigma1));
    }
    if (!(raw.sigma2 > 0.0)) {
        throw HestonError(ErrorCode::NonPositiveSigma, "sigma2 must be > 0, got " + std::to_string(raw.sigma2));
    }
    if (!(raw.rho > -1.0 && raw.rho < 1.0)) {
        throw HestonError(ErrorCode::RhoOutOfRange, "rho must lie in (-1, 1), got " + std::to_string(raw.rho));
    }
    if (!(raw.y0 > 0.0)) throw HestonError(ErrorCode::NonPositiveY0, "y0 must be > 0, got " + std::to_string(raw.y0));
    return ModelParams(raw);
}

ParamSet reference_param_set() noexcept {
    return ParamSet{.a = 0.4, .b = 0.3, .alpha = 0.1, .beta = 0.15, .sigma1 = 0.4, .sigma2 = 0.3, .rho = 0.2,
                    .y0 = 0.2, .x0 = 0.1};
}

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Critical: return "critical";
        case Regime::Supercritical: return "supercritical";
    }
    return "unknown";
}

Regime classify_regime(const ModelParams& params) noexcept {
    if (params.b() > 0.0) return Regime::Subcritical;
    if (params.b() == 0.0) return Regime::Critical;
    return Regime::Supercritical;
}

double stationary_laplace(const ModelParams& params, double lambda) {
    require_subcritical(params, "stationary_laplace");
    if (!(lambda >= 0.0)) throw HestonError(ErrorCode::InvalidArgument, "lambda must be nonnegative");
    const double s2 = params.sigma1() * params.sigma1();
    return std::pow(1.0 + s2 * lambda / (2.0 * params.b()), -2.0 * params.a() / s2);
}

StationaryMoments stationary_moments(const ModelParams& params) {
    require_subcritical(params, "stationary_moments");
    const double a = params.a();
    const double b = params.b();
    const double s2 = params.sigma1() * params.sigma1();

    StationaryMoments m;
    m.m1 = a / b;
    m.m2 = (2.0 * a + s2) * a / (2.0 * b * b);
    m.m3 = (2.0 * a + s2) * (a + s2) * a / (2.0 * b * b * b);
    // Closed forms rather than m2 - m1^2 etc., which cancel badly when sigma1 is small.
    m.var = a * s2 / (2.0 * b * b);
    m.cross = a * a * s2 * (2.0 * a + s2) / (4.0 * b * b * b * b);
    return m;
}

double conditional_mean_y(const ModelParams& params, double y_s, double s, double t) {
    if (!(t >= s)) throw HestonError(ErrorCode::InvalidArgument, "conditional mean needs t >= s");
    const double tau = t - s;
    const double b = params.b();
    if (b == 0.0) return y_s + params.a() * tau;
    return std::exp(-b * tau) * y_s + params.a() * decay_integral(b, tau);
}

double conditional_mean_x(const ModelParams& params, double y_s, double x_s, double s, double t) {
    if (!(t >= s)) throw HestonError(ErrorCode::InvalidArgument, "conditional mean needs t >= s");
    const double tau = t - s;
    const double b = params.b();
    const double a = params.a();
    const double beta = params.beta();
    if (b == 0.0) {
        return x_s + params.alpha() * tau - beta * y_s * tau - 0.5 * a * beta * tau * tau;
    }
    const double g = decay_integral(b, tau);
    // a beta times the double integral of exp(-b(u - v)) over s <= v <= u <= t
    return x_s + params.alpha() * tau - beta * y_s * g - a * beta * (tau - g) / b;
}

}  // namespace hestonlab
