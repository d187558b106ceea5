#include "hestonlab/lse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hestonlab/error.hpp"

namespace hestonlab {
namespace {

constexpr double kDegenerateTolerance = 1e-14;

// N sum (v - mean)^2 over the first n entries, i.e. n sum v^2 - (sum v)^2
// without the cancellation.
double centred_gram(std::span<const double> v, std::size_t n) {
    double mean = 0.0;
    for (std::size_t k = 0; k < n; ++k) mean += v[k];
    mean /= static_cast<double>(n);
    double ss = 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = v[k] - mean;
        ss += d * d;
        s += d;
    }
    return static_cast<double>(n) * ss - s * s;
}

struct RegressorSums {
    std::size_t m = 0;     // increments
    double sum = 0.0;      // sum y_{k-1}
    double sum_sq = 0.0;   // sum y_{k-1}^2
    double det = 0.0;      // m sum_sq - sum^2
};

RegressorSums regressor_sums(std::span<const double> y) {
    if (y.size() < 3) throw HestonError(ErrorCode::PathTooShort, "discrete LSE needs at least two increments");
    RegressorSums r;
    r.m = y.size() - 1;
    for (std::size_t k = 0; k < r.m; ++k) {
        r.sum += y[k];
        r.sum_sq += y[k] * y[k];
    }
    r.det = centred_gram(y, r.m);
    if (r.det <= kDegenerateTolerance * std::max(1.0, static_cast<double>(r.m) * r.sum_sq)) {
        throw HestonError(ErrorCode::DegeneratePath, "regressor values are all equal");
    }
    return r;
}

// n [[m, -sum], [-sum, sum_sq]]^-1 [end - start, -cross] via the adjugate.
std::array<double, 2> solve_normal(const RegressorSums& r, double increment, double cross, double dt) {
    const double n = 1.0 / dt;
    return {n * (r.sum_sq * increment - r.sum * cross) / r.det, n * (r.sum * increment - static_cast<double>(r.m) * cross) / r.det};
}

}  // namespace

PathFunctionals path_functionals(const XYPath& path) {
    const auto& y = path.y;
    const auto& x = path.x;
    if (y.size() < 2) throw HestonError(ErrorCode::PathTooShort, "a path needs at least two samples");
    if (x.size() != y.size()) throw HestonError(ErrorCode::LengthMismatch, "y and x lengths differ");
    if (y.size() != path.grid.steps() + 1) {
        throw HestonError(ErrorCode::LengthMismatch, "path length does not match its grid");
    }

    const std::size_t n = y.size() - 1;
    const double dt = path.grid.dt();
    const double horizon = path.grid.horizon();

    PathFunctionals f;
    f.y_0 = y.front();
    f.x_0 = x.front();
    f.y_T = y.back();
    f.x_T = x.back();
    f.horizon = horizon;
    f.steps = n;

    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double yl = y[k - 1];
        const double dy = y[k] - yl;
        s1 += yl;
        s2 += yl * yl;
        s3 += yl * yl * yl;
        f.i3 += yl * dy;
        f.i4 += yl * (x[k] - x[k - 1]);
        f.qv_y += dy * dy;
    }
    f.i1 = s1 * dt;
    f.i2 = s2 * dt;
    f.e1 = f.i1 / horizon;
    f.e2 = f.i2 / horizon;
    f.e3 = s3 * dt / horizon;
    f.denom = dt * dt * centred_gram(y, n);
    return f;
}

bool is_degenerate(const PathFunctionals& f) noexcept {
    return !(f.denom > kDegenerateTolerance * std::max(1.0, f.horizon * f.i2));
}

std::array<double, 2> lse_discrete_ab(std::span<const double> y, double dt) {
    const RegressorSums r = regressor_sums(y);
    double cross = 0.0;
    for (std::size_t k = 1; k <= r.m; ++k) cross += (y[k] - y[k - 1]) * y[k - 1];
    return solve_normal(r, y[r.m] - y[0], cross, dt);
}

std::array<double, 2> lse_discrete_alphabeta(std::span<const double> y, std::span<const double> x, double dt) {
    if (x.size() != y.size()) throw HestonError(ErrorCode::LengthMismatch, "y and x lengths differ");
    const RegressorSums r = regressor_sums(y);
    double cross = 0.0;
    for (std::size_t k = 1; k <= r.m; ++k) cross += (x[k] - x[k - 1]) * y[k - 1];
    return solve_normal(r, x[r.m] - x[0], cross, dt);
}

LseEstimate lse_from_functionals(const PathFunctionals& f) {
    if (is_degenerate(f)) throw HestonError(ErrorCode::DegeneratePath, "T i2 - i1^2 vanishes");
    const double dy = f.y_T - f.y_0;
    const double dx = f.x_T - f.x_0;
    LseEstimate est;
    est.a_hat = (dy * f.i2 - f.i1 * f.i3) / f.denom;
    est.b_hat = (dy * f.i1 - f.horizon * f.i3) / f.denom;
    est.alpha_hat = (dx * f.i2 - f.i1 * f.i4) / f.denom;
    est.beta_hat = (dx * f.i1 - f.horizon * f.i4) / f.denom;
    est.functionals = f;
    est.horizon = f.horizon;
    return est;
}

double ls_objective(const DriftVector& candidate, std::span<const double> y, std::span<const double> x, double dt) {
    if (x.size() != y.size()) throw HestonError(ErrorCode::LengthMismatch, "y and x lengths differ");
    const auto [a, b, alpha, beta] = candidate;
    double total = 0.0;
    for (std::size_t k = 1; k < y.size(); ++k) {
        const double ry = (y[k] - y[k - 1]) - dt * (a - b * y[k - 1]);
        const double rx = (x[k] - x[k - 1]) - dt * (alpha - beta * y[k - 1]);
        total += ry * ry + rx * rx;
    }
    return total;
}

ItoDiagnostic ito_cross_check(const PathFunctionals& f, double sigma1) noexcept {
    const double s2 = sigma1 * sigma1;
    return ItoDiagnostic{
        .i3_direct = f.i3,
        .i3_ito = 0.5 * (f.y_T * f.y_T - f.y_0 * f.y_0 - s2 * f.i1),
        .qv_ratio = f.qv_y / (s2 * f.i1),
    };
}

DriftVector normalized_error(const LseEstimate& est, const DriftVector& truth) noexcept {
    const double scale = std::sqrt(est.horizon);
    const DriftVector theta = est.theta();
    DriftVector out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = scale * (theta[i] - truth[i]);
    return out;
}

ScalingStatistic random_scaling_transform(const LseEstimate& est, const DriftVector& truth,
                                          const PathFunctionals& f) {
    if (is_degenerate(f)) throw HestonError(ErrorCode::DegeneratePath, "T i2 - i1^2 vanishes");
    const double disc = f.e1 * f.e3 - f.e2 * f.e2;
    if (!(f.e1 > 0.0) || !(disc > 0.0)) {
        throw HestonError(ErrorCode::NonPositiveScalingDiscriminant, "need e1 > 0 and e1 e3 > e2^2");
    }
    const DriftVector err = normalized_error(est, truth);
    const double lead = (f.e2 - f.e1 * f.e1) / std::sqrt(disc);
    const double outer = 1.0 / std::sqrt(f.e1);

    ScalingStatistic out;
    for (std::size_t block = 0; block < 2; ++block) {
        const double level = err[2 * block];
        const double slope = err[2 * block + 1];
        out.values[2 * block] = outer * lead * level;
        out.values[2 * block + 1] = outer * (-level + f.e1 * slope);
    }
    return out;
}

}  // namespace hestonlab
