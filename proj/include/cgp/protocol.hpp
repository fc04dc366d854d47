#pragma once

// Independent oracles for the closed forms in generating_power.hpp:
//  * dense two-copy simulation of the swap-measurement detection protocol,
//  * Monte Carlo over random incoherent inputs straight from the definition.

#include <cstddef>

#include "cgp/channel.hpp"
#include "cgp/ensembles.hpp"
#include "cgp/matrix_core.hpp"

namespace cgp {

struct ProtocolTrace {
  int dim = 0;
  double s_expectation_omega = 0.0;        ///< tr(S omega), omega = (D o E)^{(x)2}(rho_B)
  double s_expectation_omega_tilde = 0.0;  ///< tr(S omega~), omega~ = E^{(x)2}(rho_B)
  double cgp_value = 0.0;
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;  ///< sample standard deviation / sqrt(n)
  std::size_t n_samples = 0;
  RngSeed seed;
};

/// How the random incoherent input diag(p) is drawn. Both give the same law.
enum class DiagonalSampler { UniformSimplex, DephasedHaarState };

/// Dephases one tensor factor (0 = first, 1 = second) of a d^2 x d^2 operator.
CMat dephase_subsystem(const CMat& x, int d, int factor);

/// (D (x) D)(x).
CMat dephase_two_copy(const CMat& x, int d);

/// (E (x) E)(rho) = sum_{k,k'} (A_k (x) A_k') rho (A_k (x) A_k')^dagger.
CMat apply_two_copy(const KrausChannel& e, const CMat& rho);

/// tr(S x) for a d^2 x d^2 operator.
double swap_expectation(const CMat& x, int d);

/// Prepares |Phi+>, dephases both halves, applies U on both, dephases again
/// and reads off tr(S omega). Also records tr(S (U (x) U) rho_B (U (x) U)^dagger).
ProtocolTrace simulate_protocol_unitary(const CMat& u);

/// Same with the channel two-trace form (1/(d+1)) [tr(S omega~) - tr(S omega)].
ProtocolTrace simulate_protocol_channel(const KrausChannel& e);

/// Mean of c_B(Q E D(|psi><psi|)) over random inputs, with its standard error.
MonteCarloEstimate monte_carlo_cgp(const KrausChannel& e, std::size_t n, RngSeed seed,
                                   DiagonalSampler sampler = DiagonalSampler::UniformSimplex);
MonteCarloEstimate monte_carlo_cgp(const CMat& u, std::size_t n, RngSeed seed,
                                   DiagonalSampler sampler = DiagonalSampler::UniformSimplex);

/// Mean and standard error of per-index samples fn(i), i in [0, n).
template <class Fn>
MonteCarloEstimate estimate_mean(std::size_t n, RngSeed seed, Fn&& fn);

}  // namespace cgp

#include "cgp/parallel.hpp"
#include "cgp/running_stats.hpp"

template <class Fn>
cgp::MonteCarloEstimate cgp::estimate_mean(std::size_t n, RngSeed seed, Fn&& fn) {
  const auto values = parallel_map<double>(n, std::forward<Fn>(fn));
  const RunningStats stats = RunningStats::of(values);
  return MonteCarloEstimate{stats.mean(), stats.std_error(), n, seed};
}
