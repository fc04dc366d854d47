#include "cgp/generating_power.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cgp/errors.hpp"
#include "cgp/parallel.hpp"

namespace cgp {

namespace {

CgpResult make_result(double raw, int d) {
  CgpResult r;
  r.dim = d;
  r.raw = std::max(raw, 0.0);
  r.bound = max_cgp(d);
  r.normalized = d >= 2 ? r.raw / r.bound : 0.0;
  return r;
}

void require_unitary(const CMat& u, const char* what) {
  require_square(u, what);
  require_finite(u, what);
  if (!is_unitary(u)) throw InputError(std::string(what) + " is not unitary");
}

}  // namespace

double max_cgp(int d) {
  if (d < 1) throw InputError("max_cgp: d must be >= 1");
  return (1.0 - 1.0 / d) / (d + 1.0);
}

CgpResult cgp_unitary(const CMat& u) {
  require_unitary(u, "unitary");
  const int d = static_cast<int>(u.rows());
  const double fourth = u.cwiseAbs2().cwiseAbs2().sum();
  return make_result((1.0 - fourth / d) / (d + 1.0), d);
}

CgpResult cgp_channel(const KrausChannel& e) {
  const int d = e.dim();
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    // column i of E(|i><i|): out(l, m) = sum_k A_k(l, i) conj(A_k(m, i))
    CMat out = CMat::Zero(d, d);
    for (const auto& a : e.kraus()) out.noalias() += a.col(i) * a.col(i).adjoint();
    out.diagonal().setZero();
    total += out.squaredNorm();
  }
  return make_result(total / (static_cast<double>(d) * (d + 1.0)), d);
}

CgpResult cgp_basis_changed(const CMat& u, const CMat& v) {
  require_unitary(u, "unitary");
  require_unitary(v, "basis change");
  if (u.rows() != v.rows()) throw InputError("cgp_basis_changed: dimension mismatch");
  return cgp_unitary(v.adjoint() * u * v);
}

bool is_mub_pair(const CMat& u, double tol) {
  if (u.rows() == 0 || u.rows() != u.cols()) return false;
  const double target = 1.0 / static_cast<double>(u.rows());
  return (u.cwiseAbs2().array() - target).abs().maxCoeff() <= tol;
}

KrausChannel mixture_channel(std::span<const CMat> us, std::span<const double> ps) {
  if (us.empty() || us.size() != ps.size()) {
    throw InputError("mixture_channel: need one probability per unitary");
  }
  double total = 0.0;
  for (double p : ps) {
    if (!std::isfinite(p) || p < 0.0) throw InputError("mixture_channel: invalid probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kExactTol) {
    throw InputError("mixture_channel: probabilities sum to " + std::to_string(total));
  }
  std::vector<CMat> kraus;
  kraus.reserve(us.size());
  for (std::size_t k = 0; k < us.size(); ++k) {
    require_unitary(us[k], "mixture component");
    if (us[k].rows() != us[0].rows()) throw InputError("mixture_channel: dimension mismatch");
    kraus.emplace_back(std::sqrt(ps[k]) * us[k]);
  }
  return KrausChannel(std::move(kraus));
}

std::vector<ScanRow> mixture_scan(std::span<const CMat> us, int grid_steps) {
  if (us.size() != 3) throw InputError("mixture_scan: exactly three unitaries required");
  if (grid_steps < 1) throw InputError("mixture_scan: grid_steps must be >= 1");
  for (const auto& u : us) {
    if (u.rows() != us[0].rows() || u.cols() != us[0].cols()) {
      throw InputError("mixture_scan: dimension mismatch");
    }
  }
  std::vector<std::pair<int, int>> grid;
  for (int i = 0; i <= grid_steps; ++i) {
    for (int j = 0; j <= grid_steps - i; ++j) grid.emplace_back(i, j);
  }
  const double n = grid_steps;
  return parallel_map<ScanRow>(grid.size(), [&](std::size_t idx) {
    const auto [i, j] = grid[idx];
    const int k = grid_steps - i - j;
    ScanRow row{i / n, j / n, k / n, 0.0};
    const double ps[3] = {row.p1, row.p2, row.p3};
    row.normalized_cgp = cgp_channel(mixture_channel(us, ps)).normalized;
    return row;
  });
}

}  // namespace cgp
