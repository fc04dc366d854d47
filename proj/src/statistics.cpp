#include "cgp/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "cgp/errors.hpp"
#include "cgp/generating_power.hpp"
#include "cgp/parallel.hpp"
#include "cgp/running_stats.hpp"

namespace cgp {

std::vector<double> sample_normalized_cgp(int d, std::size_t n, RngSeed seed) {
  if (d < 2) throw InputError("CGP sampling needs d >= 2");
  if (n < 1) throw InputError("CGP sampling needs at least one sample");
  return parallel_map<double>(n, [&](std::size_t i) {
    SampleStream rng = SampleStream::derive(seed, i);
    return cgp_unitary(haar_unitary(d, rng)).normalized;
  });
}

DistributionSummary summarize_distribution(int d, std::span<const double> samples, int bins,
                                           RngSeed seed) {
  if (bins < 1) throw InputError("histogram needs at least one bin");
  if (samples.empty()) throw InputError("no samples to summarize");
  DistributionSummary s;
  s.dim = d;
  s.n_samples = samples.size();
  s.seed = seed;
  const RunningStats stats = RunningStats::of(samples);
  s.mean = stats.mean();
  s.variance = stats.variance();

  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (double x : samples) {
    auto b = static_cast<long>(std::floor(x * bins));
    b = std::clamp<long>(b, 0, bins - 1);
    ++counts[static_cast<std::size_t>(b)];
  }
  const double width = 1.0 / bins;
  const double n = static_cast<double>(samples.size());
  s.histogram.reserve(counts.size());
  for (int b = 0; b < bins; ++b) {
    s.histogram.push_back({b * width, (b + 1) * width,
                           static_cast<double>(counts[static_cast<std::size_t>(b)]) / (n * width)});
  }
  s.histogram.back().right = 1.0;
  return s;
}

DistributionSummary sample_cgp_distribution(int d, std::size_t n, RngSeed seed, int bins) {
  if (bins < 1) throw InputError("histogram needs at least one bin");
  const auto values = sample_normalized_cgp(d, n, seed);
  return summarize_distribution(d, values, bins, seed);
}

double analytic_mean(int d) {
  if (d < 1) throw InputError("analytic_mean: d must be >= 1");
  return (d - 1.0) / ((d + 1.0) * (d + 1.0));
}

double analytic_normalized_mean(int d) {
  if (d < 2) throw InputError("analytic_normalized_mean: d must be >= 2");
  return 1.0 / (1.0 + 1.0 / d);
}

double analytic_pdd_d2(double c) {
  if (!(c >= 0.0) || c >= 1.0) {
    throw InputError("analytic_pdd_d2: c must lie in [0, 1), got " + std::to_string(c));
  }
  return 0.5 / std::sqrt(1.0 - c);
}

double analytic_cdf_d2(double c) {
  if (c <= 0.0) return 0.0;
  if (c >= 1.0) return 1.0;
  return 1.0 - std::sqrt(1.0 - c);
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw InputError("KS statistic of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    worst = std::max({worst, above, below});
  }
  return worst;
}

double ks_test_d2(std::span<const double> samples) {
  return ks_statistic(samples, analytic_cdf_d2);
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InputError("KS statistic of an empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double worst = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return worst;
}

double ks_pvalue(double statistic, double n_eff) {
  if (n_eff <= 0.0) throw InputError("ks_pvalue: effective sample size must be positive");
  const double root = std::sqrt(n_eff);
  const double lambda = (root + 0.12 + 0.11 / root) * statistic;
  if (lambda < 1e-3) return 1.0;
  // Q_KS(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2)
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

ScalingFit fit_power_law(std::span<const int> dims, std::span<const double> variances) {
  if (dims.size() != variances.size()) throw InputError("fit_power_law: size mismatch");
  const std::set<int> distinct(dims.begin(), dims.end());
  if (distinct.size() < 3) throw InputError("power-law fit needs at least 3 distinct dimensions");
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  const double n = static_cast<double>(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] < 1 || !(variances[k] > 0.0)) {
      throw InputError("power-law fit needs positive dimensions and variances");
    }
    const double x = std::log(static_cast<double>(dims[k]));
    const double y = std::log(variances[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  ScalingFit fit;
  fit.dims.assign(dims.begin(), dims.end());
  fit.variances.assign(variances.begin(), variances.end());
  fit.exponent = -slope;
  fit.amplitude = std::exp(intercept);
  return fit;
}

ScalingFit variance_scaling_fit(std::span<const int> dims, std::size_t n_per_dim, RngSeed seed) {
  const std::set<int> distinct(dims.begin(), dims.end());
  if (distinct.size() < 3) throw InputError("variance scaling needs at least 3 distinct dimensions");
  if (n_per_dim < 2) throw InputError("variance scaling needs at least 2 samples per dimension");
  std::vector<double> variances;
  variances.reserve(dims.size());
  for (int d : dims) {
    if (d < 2) throw InputError("variance scaling dimensions must be >= 2");
    const auto values = sample_normalized_cgp(d, n_per_dim, derive_seed(seed, static_cast<std::uint64_t>(d)));
    variances.push_back(RunningStats::of(values).variance());
  }
  return fit_power_law(dims, variances);
}

LevyBound levy_bound(int d) {
  if (d < 2) throw InputError("levy_bound: d must be >= 2");
  const double cube_root = std::cbrt(static_cast<double>(d));
  return {1.0 - 2.0 / cube_root, 1.0 - std::exp(-cube_root / 256.0)};
}

Moments moments_summary(std::span<const double> samples) {
  if (samples.size() < 2) throw InputError("moments need at least 2 samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double x : samples) {
    const double dx = x - mean;
    const double dx2 = dx * dx;
    m2 += dx2;
    m3 += dx2 * dx;
    m4 += dx2 * dx2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  Moments out;
  out.mean = mean;
  out.variance = m2 * n / (n - 1.0);
  if (m2 <= 0.0) return out;
  const double g1 = m3 / std::pow(m2, 1.5);
  const double g2 = m4 / (m2 * m2) - 3.0;
  out.skewness = n >= 3 ? g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0) : g1;
  out.excess_kurtosis =
      n >= 4 ? ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0)) : g2;
  return out;
}

}  // namespace cgp
