#include "cgp/matrix_core.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "cgp/errors.hpp"

namespace cgp {

void require_finite(const CMat& m, std::string_view what) {
  if (!m.allFinite()) {
    throw InputError(std::string(what) + " has non-finite entries");
  }
}

void require_square(const CMat& m, std::string_view what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InputError(std::string(what) + " must be square and non-empty, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

PureState::PureState(CVec amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw InputError("pure state must have dimension >= 1");
  if (!amplitudes_.allFinite()) throw InputError("pure state has non-finite amplitudes");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw InputError("pure state is not normalized (norm " + std::to_string(norm) + ")");
  }
}

CMat PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

DensityMatrix::DensityMatrix(CMat mat, double hermitian_tol, double trace_tol,
                             double eigenvalue_floor)
    : mat_(std::move(mat)) {
  require_square(mat_, "density matrix");
  require_finite(mat_, "density matrix");
  const double asym = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > hermitian_tol) {
    throw InputError("density matrix is not Hermitian (max deviation " +
                     std::to_string(asym) + ")");
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > trace_tol) {
    throw InputError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const CMat herm = 0.5 * (mat_ + mat_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on density matrix");
  if (es.eigenvalues().minCoeff() < eigenvalue_floor) {
    throw InputError("density matrix has negative eigenvalue " +
                     std::to_string(es.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

CMat kron(const CMat& a, const CMat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Complex hs_inner(const CMat& x, const CMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw InputError("hs_inner: dimension mismatch");
  }
  // tr(x^dagger y) = sum_ij conj(x_ij) y_ij
  return x.conjugate().cwiseProduct(y).sum();
}

double norm2_sq(const CMat& x) { return x.squaredNorm(); }

double trace_norm(const CMat& x) {
  require_square(x, "trace_norm argument");
  Eigen::JacobiSVD<CMat> svd(x);
  const auto& sv = svd.singularValues();
  if (!sv.allFinite()) throw NumericalError("SVD produced non-finite singular values");
  return sv.sum();
}

CMat swap_operator(int d) {
  if (d < 1) throw InputError("swap_operator: d must be >= 1");
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CMat s = CMat::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  }
  return s;
}

PureState max_entangled(int d) {
  if (d < 1) throw InputError("max_entangled: d must be >= 1");
  CVec v = CVec::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i) = amp;
  return PureState(std::move(v));
}

DensityMatrix rho_b(int d) {
  if (d < 1) throw InputError("rho_b: d must be >= 1");
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CMat rho = CMat::Zero(n, n);
  for (int i = 0; i < d; ++i) rho(i * d + i, i * d + i) = 1.0 / d;
  return DensityMatrix(std::move(rho));
}

bool is_unitary(const CMat& u, double tol) {
  if (u.rows() == 0 || u.rows() != u.cols() || !u.allFinite()) return false;
  const CMat defect = u.adjoint() * u - CMat::Identity(u.rows(), u.cols());
  return defect.norm() <= tol;
}

}  // namespace cgp
