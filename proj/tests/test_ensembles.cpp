#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cgp/ensembles.hpp"
#include "cgp/errors.hpp"
#include "cgp/parallel.hpp"
#include "cgp/running_stats.hpp"
#include "cgp/statistics.hpp"
#include "test_support.hpp"

using namespace cgp;
using cgp::testing::stream;
using cgp::testing::within_se;

TEST_CASE("streams are deterministic and distinct") {
  auto a = SampleStream::derive(RngSeed{42}, 7);
  auto b = SampleStream::derive(RngSeed{42}, 7);
  auto c = SampleStream::derive(RngSeed{42}, 8);
  auto e = SampleStream::derive(RngSeed{43}, 7);
  const auto a0 = a();
  CHECK(a0 == b());
  CHECK(a0 != c());
  CHECK(a0 != e());
}

TEST_CASE("haar_unitary") {
  SUBCASE("d = 1 is a phase") {
    auto rng = stream(1);
    const CMat u = haar_unitary(1, rng);
    CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-14);
  }
  SUBCASE("unitary and reproducible") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = SampleStream::derive(RngSeed{9}, i);
      CHECK(is_unitary(haar_unitary(8, rng), 1e-10));
    }
    auto r1 = stream(3, 5);
    auto r2 = stream(3, 5);
    CHECK(haar_unitary(6, r1) == haar_unitary(6, r2));
  }
  SUBCASE("fourth moment of an entry is 2/(d(d+1))") {
    for (int d : {2, 3, 5}) {
      RunningStats s;
      for (std::uint64_t i = 0; i < 100000; ++i) {
        auto rng = SampleStream::derive(RngSeed{11}, i);
        const CMat u = haar_unitary(d, rng);
        s.push(std::pow(std::norm(u(0, d - 1)), 2));
      }
      CHECK(within_se(s.mean(), 2.0 / (d * (d + 1.0)), s.std_error()));
    }
  }
  SUBCASE("left invariance of the entry-modulus distribution") {
    auto vr = stream(77);
    const CMat v = haar_unitary(4, vr);
    const std::size_t n = 10000;
    std::vector<double> plain(n);
    std::vector<double> rotated(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto r1 = SampleStream::derive(RngSeed{100}, i);
      auto r2 = SampleStream::derive(RngSeed{200}, i);
      plain[i] = std::abs(haar_unitary(4, r1)(1, 2));
      rotated[i] = std::abs((v * haar_unitary(4, r2))(1, 2));
    }
    const double ks = ks_two_sample(plain, rotated);
    CHECK(ks_pvalue(ks, n / 2.0) > 0.001);
  }
}

TEST_CASE("batch sampling does not depend on the thread count") {
  auto draw = [] {
    return parallel_map<double>(500, [](std::size_t i) {
      auto rng = SampleStream::derive(RngSeed{5}, i);
      return std::real(haar_unitary(5, rng)(2, 3));
    });
  };
  set_thread_count(1);
  const auto serial = draw();
  set_thread_count(4);
  const auto parallel = draw();
  set_thread_count(0);
  CHECK(serial == parallel);
}

TEST_CASE("haar_state") {
  auto rng = stream(2);
  CHECK(std::abs(std::abs(haar_state(1, rng).amplitudes()(0)) - 1.0) < 1e-14);
  const int d = 4;
  RunningStats m2;
  RunningStats m4;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    auto r = SampleStream::derive(RngSeed{12}, i);
    const double p = std::norm(haar_state(d, r).amplitudes()(1));
    m2.push(p);
    m4.push(p * p);
  }
  CHECK(within_se(m2.mean(), 1.0 / d, m2.std_error()));
  CHECK(within_se(m4.mean(), 2.0 / (d * (d + 1.0)), m4.std_error()));
}

TEST_CASE("uniform_simplex and dephased Haar diagonals") {
  auto rng = stream(3);
  CHECK(uniform_simplex(1, rng).probs() == std::vector<double>{1.0});
  const SimplexPoint q = dephased_haar_diagonal(6, rng);
  double total = 0.0;
  for (double p : q.probs()) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  const int d = 5;
  RunningStats first, second;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    auto r = SampleStream::derive(RngSeed{13}, i);
    const SimplexPoint p = uniform_simplex(d, r);
    first.push(p[2]);
    second.push(p[2] * p[2]);
  }
  CHECK(within_se(first.mean(), 1.0 / d, first.std_error()));
  CHECK(within_se(second.mean(), 2.0 / (d * (d + 1.0)), second.std_error()));

  SUBCASE("d = 2 marginal is uniform on [0, 1]") {
    std::vector<double> p1(100000);
    for (std::size_t i = 0; i < p1.size(); ++i) {
      auto r = SampleStream::derive(RngSeed{14}, i);
      p1[i] = dephased_haar_diagonal(2, r)[0];
    }
    CHECK(ks_statistic(p1, [](double x) { return std::clamp(x, 0.0, 1.0); }) < 0.01);
  }
}

TEST_CASE("simplex point validation") {
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.6}), InputError);
  CHECK_THROWS_AS(SimplexPoint({1.5, -0.5}), InputError);
  CHECK_THROWS_AS(SimplexPoint(std::vector<double>{}), InputError);
  auto rng = stream(1);
  CHECK_THROWS_AS(haar_unitary(0, rng), InputError);
}
