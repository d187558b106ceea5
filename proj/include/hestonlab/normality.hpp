#pragma once

#include <cstddef>
#include <span>

namespace hestonlab {

// Standard normal distribution function through std::erfc.
double normal_cdf(double x) noexcept;

// N(0, variance) density.
double normal_density(double x, double variance) noexcept;

// Population (1/n) central moments.
struct SampleMoments {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    double skewness = 0.0;         // m3 / m2^(3/2)
    double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
};

// Throws InsufficientData for n < 2 and TiesDegenerate when m2 == 0.
SampleMoments sample_moments(std::span<const double> sample);

struct TestResult {
    double statistic = 0.0;
    double pvalue = 0.0;
};

// Survival function of chi-square(2) at jb: exp(-jb / 2).
double jarque_bera_pvalue(double jb) noexcept;

// JB = (n/6)(g1^2 + g2^2/4). Throws InsufficientData for n < 8.
TestResult jarque_bera(std::span<const double> sample);

// p-value for the composite-normality A^2 (mean and variance estimated).
// A^2 is first modified to A*^2 = A^2 (1 + 0.75/n + 2.25/n^2), then
//   A*^2 <  0.2   p = 1 - exp(-13.436 + 101.14 A*^2 - 223.73 A*^4)
//   A*^2 <  0.34  p = 1 - exp(-8.318 + 42.796 A*^2 - 59.938 A*^4)
//   A*^2 <  0.6   p = exp(0.9177 - 4.279 A*^2 - 1.38 A*^4)
//   otherwise     p = exp(1.2937 - 5.709 A*^2 + 0.0186 A*^4)
// (D'Agostino and Stephens, Goodness-of-Fit Techniques, 1986, table 4.9.)
double anderson_darling_pvalue(double a2, std::size_t n) noexcept;

// Reports the unmodified A^2 of the sample standardized by its mean and
// (n - 1) standard deviation. Throws InsufficientData for n < 8 and
// TiesDegenerate for a constant sample.
TestResult anderson_darling(std::span<const double> sample);

}  // namespace hestonlab
