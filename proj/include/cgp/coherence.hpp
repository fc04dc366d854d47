#pragma once

// Dephasing in the computational basis, its complement, and the coherence
// measures built from them.

#include <optional>
#include <vector>

#include "cgp/channel.hpp"
#include "cgp/matrix_core.hpp"

namespace cgp {

/// Keeps the diagonal, zeroes everything else.
CMat dephase(const CMat& x);

/// x - dephase(x): the off-diagonal part.
CMat q_project(const CMat& x);

/// Squared 2-norm of the off-diagonal part, sum_{i != j} |rho_ij|^2.
double c_b(const DensityMatrix& rho);

/// Trace norm of the off-diagonal part.
double c_b_tilde(const DensityMatrix& rho);

/// u|j> = phases[j] |permutation[j]>.
struct PermutationPhase {
  std::vector<int> permutation;
  std::vector<Complex> phases;
};

/// Decomposes an incoherent unitary; empty when some column has no entry of
/// modulus one. Throws InputError for a non-unitary argument.
std::optional<PermutationPhase> is_incoherent_unitary(const CMat& u, double tol = kStructuralTol);

/// True iff E o D and D o E agree on every matrix unit |l><m|.
bool is_incoherent_channel(const KrausChannel& e, double tol = kStructuralTol);

}  // namespace cgp
