#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace cgp {

// Welford accumulator for mean and variance.
class RunningStats {
 public:
  void push(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  static RunningStats of(std::span<const double> xs) {
    RunningStats s;
    for (double x : xs) s.push(x);
    return s;
  }

  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double std_error() const {
    return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace cgp
