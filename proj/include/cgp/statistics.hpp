#pragma once

// CGP as a random variable over Haar unitaries: sampling, histograms,
// goodness-of-fit, variance scaling and concentration.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cgp/ensembles.hpp"

namespace cgp {

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  double density = 0.0;  ///< count / (n * width)
};

struct DistributionSummary {
  int dim = 0;
  std::size_t n_samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  std::vector<HistogramBin> histogram;
  RngSeed seed;
};

struct ScalingFit {
  std::vector<int> dims;
  std::vector<double> variances;
  double exponent = 0.0;   ///< alpha in A / d^alpha
  double amplitude = 0.0;  ///< A
};

struct LevyBound {
  double threshold = 0.0;
  double prob_lower_bound = 0.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
};

/// Normalized CGP of n Haar unitaries; sample i uses stream (seed, i).
std::vector<double> sample_normalized_cgp(int d, std::size_t n, RngSeed seed);

/// Histogram over [0, 1] plus mean and unbiased variance of `samples`.
DistributionSummary summarize_distribution(int d, std::span<const double> samples, int bins,
                                           RngSeed seed);

DistributionSummary sample_cgp_distribution(int d, std::size_t n, RngSeed seed, int bins = 100);

/// Haar average of the raw CGP, (d-1)/(d+1)^2.
double analytic_mean(int d);
/// Haar average of the normalized CGP, (1 + 1/d)^{-1}.
double analytic_normalized_mean(int d);

/// Density of the normalized CGP for d = 2, 1/(2 sqrt(1-c)). Requires 0 <= c < 1.
double analytic_pdd_d2(double c);
/// Matching CDF, 1 - sqrt(1-c), clamped to [0, 1].
double analytic_cdf_d2(double c);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);
/// KS statistic against the d = 2 CDF.
double ks_test_d2(std::span<const double> samples);
/// Two-sample KS statistic sup |F_a - F_b|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);
/// Asymptotic p-value of a KS statistic at effective sample size n_eff
/// (n for one sample, n m / (n + m) for two).
double ks_pvalue(double statistic, double n_eff);

/// Least-squares line through (log d, log var); var ~ A / d^alpha.
ScalingFit fit_power_law(std::span<const int> dims, std::span<const double> variances);
/// Samples n_per_dim Haar unitaries per dimension and fits the variance of the
/// normalized CGP. Needs at least three distinct dims >= 2.
ScalingFit variance_scaling_fit(std::span<const int> dims, std::size_t n_per_dim, RngSeed seed);

/// Levy concentration: P(normalized CGP >= threshold) >= prob_lower_bound.
LevyBound levy_bound(int d);

/// Mean, unbiased variance, adjusted skewness G1 and excess kurtosis G2.
/// G1 needs n >= 3 and G2 n >= 4; below that the plain moment ratios are
/// returned. A constant sample has skewness and kurtosis 0.
Moments moments_summary(std::span<const double> samples);

}  // namespace cgp
