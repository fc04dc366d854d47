#pragma once

// Asymmetry generating power relative to a nondegenerate Hamiltonian that is
// diagonal in the computational basis.

#include <cstddef>
#include <vector>

#include "cgp/channel.hpp"
#include "cgp/protocol.hpp"

namespace cgp {

/// Spectrum eps_1..eps_d of H = diag(eps). Rejects d < 2 and spectra whose
/// smallest gap is below kMinGap.
class HamiltonianSpectrum {
 public:
  static constexpr double kMinGap = 1e-9;

  explicit HamiltonianSpectrum(std::vector<double> eigenvalues);

  int dim() const { return static_cast<int>(eigenvalues_.size()); }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  /// min_{l != m} |eps_l - eps_m|
  double min_gap() const { return min_gap_; }
  /// max_{l != m} |eps_l - eps_m|
  double max_gap() const { return max_gap_; }

  HamiltonianSpectrum shifted(double shift) const;
  HamiltonianSpectrum scaled(double factor) const;
  CMat as_matrix() const;

 private:
  std::vector<double> eigenvalues_;
  double min_gap_ = 0.0;
  double max_gap_ = 0.0;
};

struct AgpResult {
  double value = 0.0;
  double lower_bound = 0.0;  ///< min_gap^2 * C_B
  double upper_bound = 0.0;  ///< max_gap^2 * C_B
};

/// [d(d+1)]^{-1} sum_{i, l != m} (eps_l - eps_m)^2 |<l|E(|i><i|)|m>|^2.
AgpResult agp(const KrausChannel& e, const HamiltonianSpectrum& h);

/// Monte Carlo of ||[H, E(D(|psi><psi|))]||_2^2 over Haar states psi.
MonteCarloEstimate agp_monte_carlo(const KrausChannel& e, const HamiltonianSpectrum& h,
                                   std::size_t n, RngSeed seed);

/// agp(u, h) == agp(u, h + shift) within kExactTol, relative to the value's scale.
bool gap_spectrum_invariance_check(const CMat& u, const HamiltonianSpectrum& h, double shift);

}  // namespace cgp
