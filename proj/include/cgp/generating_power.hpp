#pragma once

// Closed-form coherence generating power of unitaries and unital channels.
// Everything here works from matrix entries; the two-copy superoperator
// route lives in protocol.hpp and is kept separate on purpose.

#include <span>
#include <vector>

#include "cgp/channel.hpp"
#include "cgp/matrix_core.hpp"

namespace cgp {

struct CgpResult {
  double raw = 0.0;         ///< C_B
  double normalized = 0.0;  ///< C_B / C_d, defined as 0 when d = 1
  int dim = 0;
  double bound = 0.0;       ///< C_d = (1 - 1/d) / (d + 1)
};

/// Maximal CGP in dimension d, (1 - 1/d)/(d + 1).
double max_cgp(int d);

/// (1/(d+1)) (1 - (1/d) sum_ij |u_ij|^4). Throws InputError unless u is unitary.
CgpResult cgp_unitary(const CMat& u);

/// [d(d+1)]^{-1} sum_{i, l != m} |sum_k (A_k)_li conj((A_k)_mi)|^2.
CgpResult cgp_channel(const KrausChannel& e);

/// CGP of u with respect to the rotated basis {v|i>}, i.e. cgp_unitary(v^dagger u v).
CgpResult cgp_basis_changed(const CMat& u, const CMat& v);

/// True iff every |u_ij|^2 = 1/d within tol (the bases B and uB are mutually unbiased).
bool is_mub_pair(const CMat& u, double tol = kStructuralTol);

/// sum_k p_k U_k . U_k^dagger as Kraus operators {sqrt(p_k) U_k}.
KrausChannel mixture_channel(std::span<const CMat> us, std::span<const double> ps);

struct ScanRow {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double normalized_cgp = 0.0;
};

/// Normalized CGP over the barycentric grid {(i, j, n - i - j) / n}, rows
/// ordered lexicographically in (p1, p2), boundary included.
std::vector<ScanRow> mixture_scan(std::span<const CMat> us, int grid_steps);

}  // namespace cgp
