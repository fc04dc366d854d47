#pragma once

// Random fixtures shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "cgp/channel.hpp"
#include "cgp/ensembles.hpp"
#include "cgp/fixtures.hpp"
#include "cgp/generating_power.hpp"
#include "cgp/matrix_core.hpp"

namespace cgp::testing {

inline SampleStream stream(std::uint64_t seed, std::uint64_t index = 0) {
  return SampleStream::derive(RngSeed{seed}, index);
}

inline CMat random_matrix(int rows, int cols, SampleStream& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = n(rng);
      m(i, j) = Complex(re, n(rng));
    }
  return m;
}

inline CMat random_hermitian(int d, SampleStream& rng) {
  const CMat g = random_matrix(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline DensityMatrix random_density(int d, SampleStream& rng) {
  const CMat g = random_matrix(d, d, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(rho);
}

inline CMat random_perm_phase(int d, SampleStream& rng) {
  return fixtures::random_permutation_phase(d, RngSeed{rng()});
}

inline CMat random_diagonal_phase(int d, SampleStream& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  CMat u = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i) u(i, i) = std::polar(1.0, angle(rng));
  return u;
}

inline std::vector<double> random_weights(int k, SampleStream& rng) {
  return uniform_simplex(k, rng).probs();
}

/// Random mixture of k Haar unitaries (unital by construction).
inline KrausChannel random_unital_channel(int d, int k, SampleStream& rng) {
  std::vector<CMat> us;
  for (int i = 0; i < k; ++i) us.push_back(haar_unitary(d, rng));
  const auto ps = random_weights(k, rng);
  return mixture_channel(us, ps);
}

/// Mixture of k permutation-phase unitaries: unital and incoherent.
inline KrausChannel random_incoherent_channel(int d, int k, SampleStream& rng) {
  std::vector<CMat> us;
  for (int i = 0; i < k; ++i) us.push_back(random_perm_phase(d, rng));
  const auto ps = random_weights(k, rng);
  return mixture_channel(us, ps);
}

/// Mixture of k diagonal-phase unitaries: unital and covariant for any diagonal H.
inline KrausChannel random_covariant_channel(int d, int k, SampleStream& rng) {
  std::vector<CMat> us;
  for (int i = 0; i < k; ++i) us.push_back(random_diagonal_phase(d, rng));
  const auto ps = random_weights(k, rng);
  return mixture_channel(us, ps);
}

/// Sorted random spectrum with gaps of at least 0.1.
inline std::vector<double> random_spectrum(int d, SampleStream& rng) {
  std::uniform_real_distribution<double> gap(0.1, 2.0);
  std::uniform_real_distribution<double> offset(-3.0, 3.0);
  std::vector<double> e(static_cast<std::size_t>(d));
  double x = offset(rng);
  for (auto& v : e) {
    v = x;
    x += gap(rng);
  }
  return e;
}

/// |a - b| <= k * se
inline bool within_se(double a, double b, double se, double k = 3.0) { return std::abs(a - b) <= k * se; }

}  // namespace cgp::testing
