#pragma once

// Dense complex matrices and the fixed two-copy constructions built on them.
// The preferred basis is always the computational basis |0>,...,|d-1>.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace cgp {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Tolerance for structural predicates (unitarity, Hermiticity, channel axioms).
inline constexpr double kStructuralTol = 1e-10;
/// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kExactTol = 1e-12;
/// Smallest eigenvalue still accepted as "positive semidefinite".
inline constexpr double kEigenvalueFloor = -1e-10;

/// Throws InputError unless every entry of `m` is finite.
void require_finite(const CMat& m, std::string_view what);
/// Throws InputError unless `m` is square (and non-empty).
void require_square(const CMat& m, std::string_view what);

/// Unit vector in C^d.
class PureState {
 public:
  explicit PureState(CVec amplitudes, double tol = kExactTol);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const CVec& amplitudes() const { return amplitudes_; }
  /// |psi><psi|
  CMat projector() const;

 private:
  CVec amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat mat, double hermitian_tol = kExactTol,
                         double trace_tol = kExactTol,
                         double eigenvalue_floor = kEigenvalueFloor);

  static DensityMatrix from_pure(const PureState& psi);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMat& mat() const { return mat_; }

 private:
  CMat mat_;
};

CMat kron(const CMat& a, const CMat& b);

/// Hilbert-Schmidt scalar product tr(x^dagger y).
Complex hs_inner(const CMat& x, const CMat& y);

/// Squared Hilbert-Schmidt norm, sum of |x_ij|^2.
double norm2_sq(const CMat& x);

/// Sum of singular values. Throws NumericalError if the SVD yields non-finite values.
double trace_norm(const CMat& x);

/// S = sum_ij |ij><ji| on C^d (x) C^d, index of |i,j> is i*d + j.
CMat swap_operator(int d);

/// |Phi+> = d^{-1/2} sum_i |ii>.
PureState max_entangled(int d);

/// (1/d) sum_i |ii><ii|, the maximally classically correlated two-copy state.
DensityMatrix rho_b(int d);

bool is_unitary(const CMat& u, double tol = kStructuralTol);

}  // namespace cgp
