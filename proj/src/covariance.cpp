#include "hestonlab/covariance.hpp"

#include "hestonlab/error.hpp"

namespace hestonlab {

Mat2 noise_matrix(const ModelParams& params) noexcept {
    const double s1 = params.sigma1();
    const double s2 = params.sigma2();
    const double c = params.rho() * s1 * s2;
    return Mat2{{s1 * s1, c}, {c, s2 * s2}};
}

AsymptoticCovariance asymptotic_covariance(const ModelParams& params) {
    if (!(params.b() > 0.0)) throw HestonError(ErrorCode::NotSubcritical, "asymptotic covariance requires b > 0");
    const double a = params.a();
    const double b = params.b();
    const double v = params.sigma1() * params.sigma1();

    AsymptoticCovariance out;
    out.s_matrix = noise_matrix(params);
    out.m_matrix = Mat2{{(2.0 * a + v) * a / (v * b), (2.0 * a + v) / v},
                        {(2.0 * a + v) / v, 2.0 * b * (a + v) / (v * a)}};
    out.sigma_matrix = kron(out.s_matrix, out.m_matrix);
    return out;
}

AsymptoticCovariance covariance_sandwich(const ModelParams& params) {
    const StationaryMoments m = stationary_moments(params);  // throws NotSubcritical

    const Mat2 c{{1.0, -m.m1}, {-m.m1, m.m2}};
    const Mat2 v{{m.m1, -m.m2}, {-m.m2, m.m3}};
    const Mat2 c_inv = inverse(c);  // det(C) = var > 0 under valid params
    const Mat4 outer = kron(Mat2::identity(), c_inv);

    AsymptoticCovariance out;
    out.s_matrix = noise_matrix(params);
    out.m_matrix = c_inv * v * c_inv;
    out.sigma_matrix = outer * kron(out.s_matrix, v) * outer;
    return out;
}

Mat4 scaling_limit_covariance(const ModelParams& params) noexcept {
    return kron(noise_matrix(params), Mat2::identity());
}

}  // namespace hestonlab
