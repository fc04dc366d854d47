#include "cgp/protocol.hpp"

#include <string>

#include "cgp/coherence.hpp"
#include "cgp/errors.hpp"

namespace cgp {

namespace {

void require_two_copy(const CMat& x, int d) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (d < 1 || x.rows() != n || x.cols() != n) {
    throw InputError("expected a two-copy operator of size " + std::to_string(n));
  }
}

SimplexPoint draw_diagonal(int d, SampleStream& rng, DiagonalSampler sampler) {
  return sampler == DiagonalSampler::UniformSimplex ? uniform_simplex(d, rng)
                                                    : dephased_haar_diagonal(d, rng);
}

ProtocolTrace finish(int d, const CMat& omega_tilde, const CMat& omega) {
  ProtocolTrace t;
  t.dim = d;
  t.s_expectation_omega_tilde = swap_expectation(omega_tilde, d);
  t.s_expectation_omega = swap_expectation(omega, d);
  t.cgp_value = (t.s_expectation_omega_tilde - t.s_expectation_omega) / (d + 1.0);
  return t;
}

}  // namespace

CMat dephase_subsystem(const CMat& x, int d, int factor) {
  require_two_copy(x, d);
  if (factor != 0 && factor != 1) throw InputError("dephase_subsystem: factor must be 0 or 1");
  CMat out = x;
  for (int r = 0; r < d * d; ++r) {
    for (int c = 0; c < d * d; ++c) {
      const bool keep = factor == 0 ? (r / d == c / d) : (r % d == c % d);
      if (!keep) out(r, c) = 0.0;
    }
  }
  return out;
}

CMat dephase_two_copy(const CMat& x, int d) {
  return dephase_subsystem(dephase_subsystem(x, d, 0), d, 1);
}

CMat apply_two_copy(const KrausChannel& e, const CMat& rho) {
  const int d = e.dim();
  require_two_copy(rho, d);
  CMat out = CMat::Zero(rho.rows(), rho.cols());
  for (const auto& a : e.kraus()) {
    for (const auto& b : e.kraus()) {
      const CMat ab = kron(a, b);
      out.noalias() += ab * rho * ab.adjoint();
    }
  }
  return out;
}

double swap_expectation(const CMat& x, int d) {
  require_two_copy(x, d);
  return (swap_operator(d) * x).trace().real();
}

ProtocolTrace simulate_protocol_unitary(const CMat& u) {
  require_square(u, "unitary");
  require_finite(u, "unitary");
  if (!is_unitary(u)) throw InputError("simulate_protocol_unitary: argument is not unitary");
  const int d = static_cast<int>(u.rows());
  // steps 1-2: dephased |Phi+><Phi+|, which is rho_B
  const CMat prepared = dephase_two_copy(max_entangled(d).projector(), d);
  // step 3: U on both halves
  const CMat uu = kron(u, u);
  const CMat rotated = uu * prepared * uu.adjoint();
  // step 4: dephase both halves again
  const CMat omega = dephase_two_copy(rotated, d);
  // steps 5-6
  ProtocolTrace t = finish(d, rotated, omega);
  t.cgp_value = (1.0 - t.s_expectation_omega) / (d + 1.0);
  return t;
}

ProtocolTrace simulate_protocol_channel(const KrausChannel& e) {
  const int d = e.dim();
  const CMat omega_tilde = apply_two_copy(e, rho_b(d).mat());
  const CMat omega = dephase_two_copy(omega_tilde, d);
  return finish(d, omega_tilde, omega);
}

MonteCarloEstimate monte_carlo_cgp(const KrausChannel& e, std::size_t n, RngSeed seed,
                                   DiagonalSampler sampler) {
  if (n < 1) throw InputError("monte_carlo_cgp: need at least one sample");
  const int d = e.dim();
  return estimate_mean(n, seed, [&](std::size_t i) {
    SampleStream rng = SampleStream::derive(seed, i);
    const SimplexPoint p = draw_diagonal(d, rng, sampler);
    const Eigen::Map<const Eigen::VectorXd> weights(p.probs().data(), d);
    // E(diag p) = sum_k A_k diag(p) A_k^dagger; c_B is its off-diagonal 2-norm squared
    CMat out = CMat::Zero(d, d);
    for (const CMat& a : e.kraus()) out.noalias() += (a * weights.asDiagonal()) * a.adjoint();
    return out.squaredNorm() - out.diagonal().squaredNorm();
  });
}

MonteCarloEstimate monte_carlo_cgp(const CMat& u, std::size_t n, RngSeed seed,
                                   DiagonalSampler sampler) {
  return monte_carlo_cgp(KrausChannel::from_unitary(u), n, seed, sampler);
}

}  // namespace cgp
