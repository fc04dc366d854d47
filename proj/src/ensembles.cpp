#include "cgp/ensembles.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "cgp/errors.hpp"

namespace cgp {

namespace {

void require_dim(int d, const char* who) {
  if (d < 1) throw InputError(std::string(who) + ": d must be >= 1");
}

CMat ginibre(int d, SampleStream& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat z(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im);
    }
  }
  return z;
}

}  // namespace

SampleStream SampleStream::derive(RngSeed seed, std::uint64_t index) {
  const std::uint64_t a = mix(seed.value + 0x9E3779B97F4A7C15ULL);
  const std::uint64_t b = mix(index ^ 0xD1B54A32D192ED03ULL);
  return SampleStream(mix(a ^ (b + 0x632BE59BD9B4E019ULL + (a << 6) + (a >> 2))));
}

RngSeed derive_seed(RngSeed seed, std::uint64_t tag) {
  SampleStream s = SampleStream::derive(seed, ~tag);
  return RngSeed{s()};
}

SimplexPoint::SimplexPoint(std::vector<double> probs, double tol) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InputError("simplex point must have at least one component");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw InputError("simplex point has a negative or non-finite component");
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw InputError("simplex point components sum to " + std::to_string(total));
  }
}

CMat SimplexPoint::as_diagonal_state() const {
  CMat rho = CMat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) rho(i, i) = probs_[static_cast<std::size_t>(i)];
  return rho;
}

CMat haar_unitary(int d, SampleStream& rng) {
  require_dim(d, "haar_unitary");
  const CMat z = ginibre(d, rng);
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ() * CMat::Identity(d, d);
  const CMat& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mod = std::abs(rjj);
    // A zero pivot has probability zero; keep the column as is if it happens.
    if (mod > 0.0) q.col(j) *= rjj / mod;
  }
  return q;
}

PureState haar_state(int d, SampleStream& rng) {
  require_dim(d, "haar_state");
  std::normal_distribution<double> normal(0.0, 1.0);
  CVec v(d);
  for (int i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  v /= v.norm();
  return PureState(std::move(v));
}

SimplexPoint uniform_simplex(int d, SampleStream& rng) {
  require_dim(d, "uniform_simplex");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(d));
  for (auto& x : p) x = expo(rng);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  return SimplexPoint(std::move(p));
}

SimplexPoint dephased_haar_diagonal(int d, SampleStream& rng) {
  const PureState psi = haar_state(d, rng);
  std::vector<double> p(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = std::norm(psi.amplitudes()(i));
  return SimplexPoint(std::move(p));
}

}  // namespace cgp
