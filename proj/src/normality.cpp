#include "hestonlab/normality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hestonlab/error.hpp"

namespace hestonlab {

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_density(double x, double variance) noexcept {
    return std::exp(-0.5 * x * x / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

SampleMoments sample_moments(std::span<const double> sample) {
    if (sample.size() < 2) throw HestonError(ErrorCode::InsufficientData, "need at least two observations");
    SampleMoments m;
    m.n = sample.size();
    const double n = static_cast<double>(m.n);
    for (double v : sample) m.mean += v;
    m.mean /= n;
    for (double v : sample) {
        const double d = v - m.mean;
        const double d2 = d * d;
        m.m2 += d2;
        m.m3 += d2 * d;
        m.m4 += d2 * d2;
    }
    m.m2 /= n;
    m.m3 /= n;
    m.m4 /= n;
    if (!(m.m2 > 0.0)) throw HestonError(ErrorCode::TiesDegenerate, "sample has zero variance");
    m.skewness = m.m3 / std::pow(m.m2, 1.5);
    m.excess_kurtosis = m.m4 / (m.m2 * m.m2) - 3.0;
    return m;
}

double jarque_bera_pvalue(double jb) noexcept { return std::exp(-0.5 * jb); }

TestResult jarque_bera(std::span<const double> sample) {
    if (sample.size() < 8) throw HestonError(ErrorCode::InsufficientData, "Jarque-Bera needs n >= 8");
    const SampleMoments m = sample_moments(sample);
    const double g1 = m.skewness;
    const double g2 = m.excess_kurtosis;
    const double jb = static_cast<double>(m.n) / 6.0 * (g1 * g1 + 0.25 * g2 * g2);
    return {jb, jarque_bera_pvalue(jb)};
}

double anderson_darling_pvalue(double a2, std::size_t n) noexcept {
    const double nn = static_cast<double>(n);
    const double z = a2 * (1.0 + 0.75 / nn + 2.25 / (nn * nn));
    if (z < 0.2) return 1.0 - std::exp(-13.436 + 101.14 * z - 223.73 * z * z);
    if (z < 0.34) return 1.0 - std::exp(-8.318 + 42.796 * z - 59.938 * z * z);
    if (z < 0.6) return std::exp(0.9177 - 4.279 * z - 1.38 * z * z);
    return std::exp(1.2937 - 5.709 * z + 0.0186 * z * z);
}

TestResult anderson_darling(std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < 8) throw HestonError(ErrorCode::InsufficientData, "Anderson-Darling needs n >= 8");

    std::vector<double> z(sample.begin(), sample.end());
    std::sort(z.begin(), z.end());
    const double nn = static_cast<double>(n);
    double mean = 0.0;
    for (double v : z) mean += v;
    mean /= nn;
    double ss = 0.0;
    for (double v : z) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (nn - 1.0));
    if (!(sd > 0.0)) throw HestonError(ErrorCode::TiesDegenerate, "sample has zero variance");
    for (double& v : z) v = (v - mean) / sd;

    // log(1 - F(z)) = log F(-z) keeps precision in the upper tail.
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double weight = 2.0 * static_cast<double>(i + 1) - 1.0;
        acc += weight * (std::log(normal_cdf(z[i])) + std::log(normal_cdf(-z[n - 1 - i])));
    }
    const double a2 = -nn - acc / nn;
    return {a2, anderson_darling_pvalue(a2, n)};
}

}  // namespace hestonlab
