#include <doctest.h>

#include <cmath>
#include <vector>

#include "cgp/asymmetry.hpp"
#include "cgp/errors.hpp"
#include "cgp/fixtures.hpp"
#include "cgp/generating_power.hpp"
#include "test_support.hpp"

using namespace cgp;
using cgp::testing::stream;
using cgp::testing::within_se;

TEST_CASE("HamiltonianSpectrum") {
  const HamiltonianSpectrum h({0.0, 1.0, 2.5});
  CHECK(h.dim() == 3);
  CHECK(h.min_gap() == 1.0);
  CHECK(h.max_gap() == 2.5);
  CHECK(h.shifted(1.0).eigenvalues()[2] == 3.5);
  CHECK(h.scaled(2.0).max_gap() == 5.0);
  CHECK(h.as_matrix()(1, 1) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(HamiltonianSpectrum({0.0, 1.0, 1.0}), InputError);
  CHECK_THROWS_AS(HamiltonianSpectrum({0.0}), InputError);
  CHECK_THROWS_AS(HamiltonianSpectrum({0.0, std::nan("")}), InputError);
  CHECK_THROWS_AS(agp(KrausChannel::from_unitary(fixtures::fourier(3)), HamiltonianSpectrum({0.0, 1.0})),
                  InputError);
}

TEST_CASE("agp zero on covariant maps") {
  auto rng = stream(1);
  for (int d = 2; d <= 6; ++d) {
    const HamiltonianSpectrum h(cgp::testing::random_spectrum(d, rng));
    CHECK(agp(KrausChannel::from_unitary(cgp::testing::random_diagonal_phase(d, rng)), h).value <= 1e-12);
    CHECK(agp(cgp::testing::random_covariant_channel(d, 3, rng), h).value <= 1e-12);
    // permutations are incoherent, so the dephased outputs stay diagonal
    CHECK(agp(KrausChannel::from_unitary(cgp::testing::random_perm_phase(d, rng)), h).value <= 1e-12);
  }
}

TEST_CASE("agp pinch case") {
  const HamiltonianSpectrum h({0.0, 1.0});
  const KrausChannel e = KrausChannel::from_unitary(fixtures::hadamard(2));
  const AgpResult r = agp(e, h);
  CHECK(std::abs(r.value - 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(r.value - cgp_channel(e).raw) <= 1e-12);
  CHECK(std::abs(r.lower_bound - r.upper_bound) <= 1e-12);
}

TEST_CASE("agp sandwich") {
  auto rng = stream(2);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + t % 5;
    const HamiltonianSpectrum h(cgp::testing::random_spectrum(d, rng));
    const KrausChannel e = cgp::testing::random_unital_channel(d, 1 + t % 3, rng);
    const AgpResult r = agp(e, h);
    const double c = cgp_channel(e).raw;
    CHECK(r.lower_bound == doctest::Approx(h.min_gap() * h.min_gap() * c).epsilon(1e-12));
    CHECK(r.upper_bound == doctest::Approx(h.max_gap() * h.max_gap() * c).epsilon(1e-12));
    CHECK(r.lower_bound <= r.value + 1e-12);
    CHECK(r.value <= r.upper_bound + 1e-12);
  }
}

TEST_CASE("agp monotone under covariant post-processing") {
  auto rng = stream(3);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 4;
    const HamiltonianSpectrum h(cgp::testing::random_spectrum(d, rng));
    const KrausChannel e = cgp::testing::random_unital_channel(d, 2, rng);
    const KrausChannel tmix = cgp::testing::random_covariant_channel(d, 3, rng);
    CHECK(agp(compose(tmix, e), h).value <= agp(e, h).value + 1e-12);
    const KrausChannel tu = KrausChannel::from_unitary(cgp::testing::random_diagonal_phase(d, rng));
    CHECK(std::abs(agp(compose(tu, e), h).value - agp(e, h).value) <= 1e-12);
  }
}

TEST_CASE("agp convexity") {
  auto rng = stream(4);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 4;
    const HamiltonianSpectrum h(cgp::testing::random_spectrum(d, rng));
    std::vector<CMat> us;
    double bound = 0.0;
    const auto ps = cgp::testing::random_weights(3, rng);
    for (int k = 0; k < 3; ++k) {
      us.push_back(haar_unitary(d, rng));
      bound += ps[static_cast<std::size_t>(k)] * agp(KrausChannel::from_unitary(us.back()), h).value;
    }
    CHECK(agp(mixture_channel(us, ps), h).value <= bound + 1e-12);
  }
}

TEST_CASE("agp_monte_carlo") {
  auto rng = stream(5);
  const HamiltonianSpectrum h(cgp::testing::random_spectrum(4, rng));
  const KrausChannel e = cgp::testing::random_unital_channel(4, 3, rng);
  const MonteCarloEstimate mc = agp_monte_carlo(e, h, 100000, RngSeed{6});
  CHECK(within_se(mc.mean, agp(e, h).value, mc.std_error));

  const MonteCarloEstimate pinch =
      agp_monte_carlo(KrausChannel::from_unitary(fixtures::hadamard(2)), HamiltonianSpectrum({0.0, 1.0}),
                      100000, RngSeed{7});
  CHECK(within_se(pinch.mean, 1.0 / 6.0, pinch.std_error));

  const MonteCarloEstimate zero =
      agp_monte_carlo(cgp::testing::random_covariant_channel(4, 2, rng), h, 1000, RngSeed{8});
  CHECK(zero.mean <= 1e-12);
}

TEST_CASE("gap spectrum dependence") {
  auto rng = stream(6);
  for (int d = 2; d <= 6; ++d) {
    const HamiltonianSpectrum h(cgp::testing::random_spectrum(d, rng));
    const CMat u = haar_unitary(d, rng);
    CHECK(gap_spectrum_invariance_check(u, h, 17.3));
    CHECK(gap_spectrum_invariance_check(u, h, 0.0));
    const KrausChannel e = KrausChannel::from_unitary(u);
    CHECK(std::abs(agp(e, h.scaled(2.0)).value - 4.0 * agp(e, h).value) <= 1e-12);
  }
}
