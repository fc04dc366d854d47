#include "cgp/coherence.hpp"

#include <cmath>

#include "cgp/errors.hpp"

namespace cgp {

CMat dephase(const CMat& x) {
  require_square(x, "dephase argument");
  CMat out = CMat::Zero(x.rows(), x.cols());
  out.diagonal() = x.diagonal();
  return out;
}

CMat q_project(const CMat& x) {
  require_square(x, "q_project argument");
  CMat out = x;
  out.diagonal().setZero();
  return out;
}

double c_b(const DensityMatrix& rho) { return norm2_sq(q_project(rho.mat())); }

double c_b_tilde(const DensityMatrix& rho) { return trace_norm(q_project(rho.mat())); }

std::optional<PermutationPhase> is_incoherent_unitary(const CMat& u, double tol) {
  require_square(u, "unitary");
  if (!is_unitary(u, tol)) throw InputError("is_incoherent_unitary: argument is not unitary");
  const int d = static_cast<int>(u.rows());
  PermutationPhase out;
  out.permutation.resize(static_cast<std::size_t>(d));
  out.phases.resize(static_cast<std::size_t>(d));
  std::vector<bool> hit(static_cast<std::size_t>(d), false);
  for (int j = 0; j < d; ++j) {
    int found = -1;
    for (int i = 0; i < d; ++i) {
      if (std::abs(std::abs(u(i, j)) - 1.0) <= tol) {
        if (found >= 0) return std::nullopt;
        found = i;
      }
    }
    if (found < 0 || hit[static_cast<std::size_t>(found)]) return std::nullopt;
    hit[static_cast<std::size_t>(found)] = true;
    out.permutation[static_cast<std::size_t>(j)] = found;
    out.phases[static_cast<std::size_t>(j)] = u(found, j) / std::abs(u(found, j));
  }
  return out;
}

bool is_incoherent_channel(const KrausChannel& e, double tol) {
  const int d = e.dim();
  for (int l = 0; l < d; ++l) {
    for (int m = 0; m < d; ++m) {
      CMat unit = CMat::Zero(d, d);
      unit(l, m) = 1.0;
      const CMat after = e.apply(dephase(unit));
      const CMat before = dephase(e.apply(unit));
      if ((after - before).norm() > tol) return false;
    }
  }
  return true;
}

}  // namespace cgp
