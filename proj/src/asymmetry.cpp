#include "cgp/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cgp/errors.hpp"
#include "cgp/generating_power.hpp"

namespace cgp {

namespace {

void require_matching(const KrausChannel& e, const HamiltonianSpectrum& h) {
  if (e.dim() != h.dim()) {
    throw InputError("channel dimension " + std::to_string(e.dim()) +
                     " does not match spectrum dimension " + std::to_string(h.dim()));
  }
}

}  // namespace

HamiltonianSpectrum::HamiltonianSpectrum(std::vector<double> eigenvalues)
    : eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.size() < 2) throw InputError("Hamiltonian spectrum needs d >= 2");
  for (double e : eigenvalues_) {
    if (!std::isfinite(e)) throw InputError("Hamiltonian spectrum has a non-finite eigenvalue");
  }
  std::vector<double> sorted = eigenvalues_;
  std::sort(sorted.begin(), sorted.end());
  min_gap_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted.size(); ++i) min_gap_ = std::min(min_gap_, sorted[i] - sorted[i - 1]);
  max_gap_ = sorted.back() - sorted.front();
  if (min_gap_ < kMinGap) {
    throw InputError("Hamiltonian spectrum is degenerate (smallest gap " + std::to_string(min_gap_) + ")");
  }
}

HamiltonianSpectrum HamiltonianSpectrum::shifted(double shift) const {
  std::vector<double> e = eigenvalues_;
  for (auto& x : e) x += shift;
  return HamiltonianSpectrum(std::move(e));
}

HamiltonianSpectrum HamiltonianSpectrum::scaled(double factor) const {
  std::vector<double> e = eigenvalues_;
  for (auto& x : e) x *= factor;
  return HamiltonianSpectrum(std::move(e));
}

CMat HamiltonianSpectrum::as_matrix() const {
  CMat h = CMat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) h(i, i) = eigenvalues_[static_cast<std::size_t>(i)];
  return h;
}

AgpResult agp(const KrausChannel& e, const HamiltonianSpectrum& h) {
  require_matching(e, h);
  const int d = e.dim();
  const auto& eps = h.eigenvalues();
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    CMat out = CMat::Zero(d, d);
    for (const auto& a : e.kraus()) out.noalias() += a.col(i) * a.col(i).adjoint();
    for (int l = 0; l < d; ++l) {
      for (int m = 0; m < d; ++m) {
        if (l == m) continue;
        const double gap = eps[static_cast<std::size_t>(l)] - eps[static_cast<std::size_t>(m)];
        total += gap * gap * std::norm(out(l, m));
      }
    }
  }
  const double cgp = cgp_channel(e).raw;
  AgpResult r;
  r.value = total / (static_cast<double>(d) * (d + 1.0));
  r.lower_bound = h.min_gap() * h.min_gap() * cgp;
  r.upper_bound = h.max_gap() * h.max_gap() * cgp;
  return r;
}

MonteCarloEstimate agp_monte_carlo(const KrausChannel& e, const HamiltonianSpectrum& h,
                                   std::size_t n, RngSeed seed) {
  require_matching(e, h);
  if (n < 1) throw InputError("agp_monte_carlo: need at least one sample");
  const int d = e.dim();
  const CMat ham = h.as_matrix();
  return estimate_mean(n, seed, [&](std::size_t i) {
    SampleStream rng = SampleStream::derive(seed, i);
    const CMat out = e.apply(dephased_haar_diagonal(d, rng).as_diagonal_state());
    return norm2_sq(ham * out - out * ham);
  });
}

bool gap_spectrum_invariance_check(const CMat& u, const HamiltonianSpectrum& h, double shift) {
  const KrausChannel e = KrausChannel::from_unitary(u);
  const double base = agp(e, h).value;
  const double moved = agp(e, h.shifted(shift)).value;
  return std::abs(base - moved) <= kExactTol * std::max(1.0, std::abs(base));
}

}  // namespace cgp
