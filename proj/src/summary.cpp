#include "hestonlab/summary.hpp"

#include <cmath>
#include <limits>

#include "hestonlab/error.hpp"

namespace hestonlab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename Fn>
void fill_or_nan(double& stat, double& pvalue, Fn test) {
    try {
        const TestResult r = test();
        stat = r.statistic;
        pvalue = r.pvalue;
    } catch (const HestonError&) {
        stat = kNaN;
        pvalue = kNaN;
    }
}

double max_abs(const Mat4& m) noexcept {
    double out = 0.0;
    for (double v : m.data) out = std::max(out, std::abs(v));
    return out;
}

}  // namespace

Mat4 sample_covariance(std::span<const DriftVector> rows) {
    if (rows.size() < 2) throw HestonError(ErrorCode::InsufficientData, "sample covariance needs n >= 2");
    DriftVector mean{};
    for (const auto& r : rows)
        for (std::size_t i = 0; i < 4; ++i) mean[i] += r[i];
    for (double& m : mean) m /= static_cast<double>(rows.size());

    Mat4 cov;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) cov(i, j) += (r[i] - mean[i]) * (r[j] - mean[j]);
    const double scale = 1.0 / static_cast<double>(rows.size() - 1);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            cov(i, j) *= scale;
            cov(j, i) = cov(i, j);
        }
    }
    return cov;
}

McSummary summarize(std::span<const ReplicateResult> results, const DriftVector& truth) {
    const std::size_t n = results.size();
    if (n < 2) throw HestonError(ErrorCode::InsufficientData, "summary needs at least two replicates");
    const double nn = static_cast<double>(n);

    McSummary s;
    s.count = n;
    s.low_confidence = n < kCovarianceMinReplicates;

    std::vector<DriftVector> normalized(n), scaled(n);
    for (std::size_t r = 0; r < n; ++r) {
        normalized[r] = results[r].normalized;
        scaled[r] = results[r].scaled.values;
        s.empirical_mean_yT += results[r].y_T;
        s.empirical_mean_xT_over_T += results[r].x_T / results[r].estimate.horizon;
    }
    s.empirical_mean_yT /= nn;
    s.empirical_mean_xT_over_T /= nn;

    std::vector<double> column(n);
    for (std::size_t p = 0; p < 4; ++p) {
        ParameterSummary& ps = s.parameters[p];
        double sum_est = 0.0, sum_err = 0.0, sum_abs = 0.0, sum_sq = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double est = results[r].estimate.theta()[p];
            const double err = est - truth[p];
            sum_est += est;
            sum_err += err;
            sum_abs += std::abs(err);
            sum_sq += err * err;
            column[r] = normalized[r][p];
        }
        ps.expected_bias = sum_err / nn;
        ps.l1_error = sum_abs / nn;
        ps.l2_error = std::sqrt(sum_sq / nn);
        ps.relative_error_of_mean_estimate = truth[p] != 0.0 ? (sum_est / nn - truth[p]) / truth[p] : kNaN;

        try {
            const SampleMoments m = sample_moments(column);
            ps.skewness = m.skewness;
            ps.excess_kurtosis = m.excess_kurtosis;
        } catch (const HestonError&) {
            ps.skewness = kNaN;
            ps.excess_kurtosis = kNaN;
        }
        fill_or_nan(ps.ad_stat, ps.ad_pvalue, [&] { return anderson_darling(column); });
        fill_or_nan(ps.jb_stat, ps.jb_pvalue, [&] { return jarque_bera(column); });
    }

    s.sample_cov_normalized = sample_covariance(normalized);
    s.sample_cov_scaled = sample_covariance(scaled);
    return s;
}

Histogram histogram_overlay(std::span<const double> sample, double theoretical_variance, std::size_t bins) {
    if (sample.size() < 2) throw HestonError(ErrorCode::DegenerateSample, "histogram needs n >= 2");
    if (!(theoretical_variance > 0.0)) {
        throw HestonError(ErrorCode::DegenerateSample, "theoretical variance must be positive");
    }
    if (bins == 0) throw HestonError(ErrorCode::InvalidArgument, "bin count must be positive");

    double mean = 0.0;
    for (double v : sample) mean += v;
    mean /= static_cast<double>(sample.size());
    const double half = 4.0 * std::sqrt(theoretical_variance);

    Histogram h;
    h.lower = mean - half;
    h.upper = mean + half;
    h.width = (h.upper - h.lower) / static_cast<double>(bins);
    h.centers.resize(bins);
    h.density.assign(bins, 0.0);
    h.overlay_density.resize(bins);

    std::size_t in_range = 0;
    for (double v : sample) {
        if (!(v >= h.lower && v <= h.upper)) continue;
        auto bin = static_cast<std::size_t>((v - h.lower) / h.width);
        if (bin >= bins) bin = bins - 1;  // v == upper
        h.density[bin] += 1.0;
        ++in_range;
    }
    const double norm = 1.0 / (static_cast<double>(sample.size()) * h.width);
    for (std::size_t i = 0; i < bins; ++i) {
        h.centers[i] = h.lower + (static_cast<double>(i) + 0.5) * h.width;
        h.density[i] *= norm;
        h.overlay_density[i] = normal_density(h.centers[i], theoretical_variance);
    }
    h.in_range_fraction = static_cast<double>(in_range) / static_cast<double>(sample.size());
    return h;
}

Mat4 relative_deviation(const Mat4& sample, const Mat4& theory) noexcept {
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double scale = i == j ? theory(i, i) : std::sqrt(theory(i, i) * theory(j, j));
            out(i, j) = (sample(i, j) - theory(i, j)) / scale;
        }
    }
    return out;
}

CovarianceDeviation covariance_check(const McSummary& summary, const AsymptoticCovariance& theory) {
    CovarianceDeviation d;
    d.normalized = relative_deviation(summary.sample_cov_normalized, theory.sigma_matrix);
    d.scaled = relative_deviation(summary.sample_cov_scaled, kron(theory.s_matrix, Mat2::identity()));
    d.max_abs_normalized = max_abs(d.normalized);
    d.max_abs_scaled = max_abs(d.scaled);
    d.low_confidence = summary.count < kCovarianceMinReplicates;
    return d;
}

}  // namespace hestonlab
