#include <doctest.h>

#include <cmath>

#include "cgp/coherence.hpp"
#include "cgp/errors.hpp"
#include "cgp/matrix_core.hpp"
#include "cgp/protocol.hpp"
#include "test_support.hpp"

using namespace cgp;
using cgp::testing::stream;

namespace {

CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMat diag(std::initializer_list<double> xs) {
  CMat m = CMat::Zero(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("kron") {
  auto rng = stream(1);
  const CMat x = cgp::testing::random_matrix(3, 3, rng);
  CHECK(kron(CMat::Identity(1, 1), x).isApprox(x));
  CHECK(kron(CMat::Identity(2, 2), CMat::Identity(2, 2)) == CMat::Identity(4, 4));
  CHECK(kron(diag({1, 2}), diag({3, 4})) == diag({3, 4, 6, 8}));
}

TEST_CASE("hs_inner") {
  CHECK(hs_inner(CMat::Identity(5, 5), CMat::Identity(5, 5)) == Complex(5.0, 0.0));
  CHECK(std::abs(hs_inner(pauli_x(), pauli_z())) == 0.0);
  auto rng = stream(2);
  for (int t = 0; t < 20; ++t) {
    const CMat x = cgp::testing::random_matrix(4, 4, rng);
    const Complex v = hs_inner(x, x);
    CHECK(std::abs(v.imag()) <= 1e-12);
    CHECK(v.real() >= 0.0);
    CHECK(v.real() == doctest::Approx(norm2_sq(x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(hs_inner(CMat::Identity(2, 2), CMat::Identity(3, 3)), InputError);
}

TEST_CASE("norm2_sq matches the swap trace for Hermitian matrices") {
  CHECK(norm2_sq(CMat::Identity(2, 2)) == 2.0);
  CHECK(norm2_sq(CMat::Zero(3, 3)) == 0.0);
  auto rng = stream(3);
  for (int d = 2; d <= 5; ++d) {
    const CMat s = swap_operator(d);
    for (int t = 0; t < 50; ++t) {
      const CMat h = cgp::testing::random_hermitian(d, rng);
      const Complex swap_trace = (s * kron(h, h)).trace();
      CHECK(std::abs(norm2_sq(h) - swap_trace.real()) <= 1e-10);
      CHECK(std::abs(swap_trace.imag()) <= 1e-10);
    }
  }
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(diag({1, -2})) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(trace_norm(CMat::Zero(3, 3)) == 0.0);
  CMat half(2, 2);
  half << 0, 0.5, 0.5, 0;
  CHECK(trace_norm(half) == doctest::Approx(1.0).epsilon(1e-14));

  auto rng = stream(4);
  for (int t = 0; t < 30; ++t) {
    const CMat x = cgp::testing::random_matrix(4, 4, rng);
    CHECK(trace_norm(x) >= std::sqrt(norm2_sq(x)) - 1e-12);
  }
}

TEST_CASE("swap_operator") {
  CHECK(swap_operator(1) == CMat::Identity(1, 1));
  const CMat s2 = swap_operator(2);
  CMat expected = CMat::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 1.0;
  expected(1, 2) = expected(2, 1) = 1.0;
  CHECK(s2 == expected);
  CHECK(swap_operator(5).trace().real() == 5.0);
  for (int d = 2; d <= 6; ++d) {
    const CMat s = swap_operator(d);
    CHECK(((s * s) - CMat::Identity(d * d, d * d)).cwiseAbs().maxCoeff() <= 1e-12);
  }
  // S |i,j> = |j,i>
  const int d = 3;
  const CMat s = swap_operator(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) CHECK(s(j * d + i, i * d + j) == Complex(1.0));
}

TEST_CASE("max_entangled") {
  CHECK(max_entangled(1).amplitudes()(0) == Complex(1.0));
  const CVec v = max_entangled(2).amplitudes();
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(v(0) - r) < 1e-15);
  CHECK(std::abs(v(3) - r) < 1e-15);
  CHECK(std::abs(v(1)) == 0.0);
  CHECK(std::abs(v(2)) == 0.0);
  for (int d = 1; d <= 8; ++d) CHECK(max_entangled(d).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rho_b") {
  const CMat r2 = rho_b(2).mat();
  CHECK(r2 == diag({0.5, 0, 0, 0.5}));
  for (int d = 1; d <= 7; ++d) {
    CHECK(rho_b(d).mat().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    // independent construction: dephase both halves of |Phi+><Phi+|
    const CMat phi = max_entangled(d).projector();
    CHECK((rho_b(d).mat() - dephase_two_copy(phi, d)).cwiseAbs().maxCoeff() <= 1e-12);
    // dephasing the whole d^2 system agrees as well
    CHECK((rho_b(d).mat() - dephase(phi)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("is_unitary") {
  for (int d = 1; d <= 5; ++d) CHECK(is_unitary(CMat::Identity(d, d)));
  CHECK_FALSE(is_unitary(diag({1, 2})));
  CHECK_FALSE(is_unitary(CMat::Zero(2, 3)));
  auto rng = stream(5);
  for (int t = 0; t < 200; ++t) CHECK(is_unitary(haar_unitary(8, rng), 1e-10));
}

TEST_CASE("state validation") {
  CVec bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(PureState{bad}, InputError);
  CHECK_THROWS_AS(DensityMatrix(diag({0.5, 0.6})), InputError);
  CHECK_THROWS_AS(DensityMatrix(diag({1.5, -0.5})), InputError);
  CMat nonherm = diag({0.5, 0.5});
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{nonherm}, InputError);
  CMat nan = diag({0.5, 0.5});
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(DensityMatrix{nan}, InputError);
  // tiny negative eigenvalues from rounding are tolerated
  CHECK_NOTHROW(DensityMatrix(diag({1.0 + 1e-13, -1e-13})));
}
