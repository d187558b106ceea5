#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hestonlab/covariance.hpp"
#include "hestonlab/experiment.hpp"
#include "hestonlab/matrix.hpp"
#include "hestonlab/normality.hpp"

namespace hestonlab {

inline constexpr std::array<std::string_view, 4> kParameterNames{"a", "b", "alpha", "beta"};

// Error statistics for one drift parameter. Shape statistics and the
// normality tests refer to the normalized errors sqrt(T)(theta_hat - theta);
// they are NaN when the sample is too small or constant.
struct ParameterSummary {
    double expected_bias = 0.0;                    // mean(theta_hat - theta)
    double l1_error = 0.0;                         // mean |theta_hat - theta|
    double l2_error = 0.0;                         // sqrt(mean (theta_hat - theta)^2)
    double relative_error_of_mean_estimate = 0.0;  // (mean theta_hat - theta) / theta
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    double ad_stat = 0.0;
    double ad_pvalue = 0.0;
    double jb_stat = 0.0;
    double jb_pvalue = 0.0;
};

// Below this many replicates the sample covariances are too noisy to compare
// against the limit law.
inline constexpr std::size_t kCovarianceMinReplicates = 100;

struct McSummary {
    std::size_t count = 0;
    std::array<ParameterSummary, 4> parameters{};
    double empirical_mean_yT = 0.0;
    double empirical_mean_xT_over_T = 0.0;
    Mat4 sample_cov_normalized;  // (n - 1) normalization, centred at the sample mean
    Mat4 sample_cov_scaled;
    bool low_confidence = false;  // count < kCovarianceMinReplicates
};

// Throws InsufficientData for fewer than two results.
McSummary summarize(std::span<const ReplicateResult> results, const DriftVector& truth);

// Unbiased sample covariance of 4-vectors.
Mat4 sample_covariance(std::span<const DriftVector> rows);

struct Histogram {
    double lower = 0.0;
    double upper = 0.0;
    double width = 0.0;
    std::vector<double> centers;
    std::vector<double> density;          // count / (n width)
    std::vector<double> overlay_density;  // N(0, theoretical_variance) at the centers
    double in_range_fraction = 0.0;
};

// 60 equal bins over [mean - 4 s, mean + 4 s] with s = sqrt(theoretical_variance).
// Throws DegenerateSample unless n >= 2 and the variance is positive.
Histogram histogram_overlay(std::span<const double> sample, double theoretical_variance,
                            std::size_t bins = 60);

struct CovarianceDeviation {
    // Diagonal entries: (sample - theory) / theory. Off-diagonal entries:
    // (sample - theory) / sqrt(theory_ii theory_jj).
    Mat4 normalized;  // against S (x) M
    Mat4 scaled;      // against S (x) I2
    double max_abs_normalized = 0.0;
    double max_abs_scaled = 0.0;
    bool low_confidence = false;
};

Mat4 relative_deviation(const Mat4& sample, const Mat4& theory) noexcept;

CovarianceDeviation covariance_check(const McSummary& summary, const AsymptoticCovariance& theory);

}  // namespace hestonlab
