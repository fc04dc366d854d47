#include "cgp/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cgp/errors.hpp"

namespace cgp::fixtures {

namespace {

void require_dim(int d) {
  if (d < 1) throw InputError("fixture dimension must be >= 1");
}

}  // namespace

CMat identity(int d) {
  require_dim(d);
  return CMat::Identity(d, d);
}

CMat fourier(int d) {
  require_dim(d);
  CMat f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int l = 1; l <= d; ++l) {
    for (int m = 1; m <= d; ++m) {
      // reduce l*m mod d first so the phase stays accurate for large d
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((l * m) % d) / d;
      f(l - 1, m - 1) = scale * std::polar(1.0, angle);
    }
  }
  return f;
}

CMat hadamard(int d) {
  require_dim(d);
  if ((d & (d - 1)) != 0) throw InputError("hadamard fixture needs d to be a power of two");
  CMat h2(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h2 << s, s, s, -s;
  CMat h = CMat::Identity(1, 1);
  for (int size = 1; size < d; size *= 2) h = kron(h, h2);
  return h;
}

CMat fourier_rowswap(int d, int row_a, int row_b) {
  if (row_a < 0 || row_b < 0 || row_a >= d || row_b >= d) {
    throw InputError("fourier_rowswap: row index out of range");
  }
  CMat f = fourier(d);
  f.row(row_a).swap(f.row(row_b));
  return f;
}

CMat random_haar(int d, RngSeed seed) {
  SampleStream rng = SampleStream::derive(seed, 0);
  return haar_unitary(d, rng);
}

CMat random_permutation_phase(int d, RngSeed seed) {
  require_dim(d);
  SampleStream rng = SampleStream::derive(seed, 0);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher-Yates with our own stream so the result does not depend on the
  // standard library's shuffle implementation.
  for (int i = d - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
  }
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  CMat u = CMat::Zero(d, d);
  for (int j = 0; j < d; ++j) u(perm[static_cast<std::size_t>(j)], j) = std::polar(1.0, angle(rng));
  return u;
}

CMat by_name(std::string_view name, int d, RngSeed seed, std::optional<std::pair<int, int>> rows) {
  if (name == "identity") return identity(d);
  if (name == "fourier") return fourier(d);
  if (name == "hadamard") return hadamard(d);
  if (name == "fourier-rowswap") {
    const auto [a, b] = rows.value_or(std::pair{0, 1});
    return fourier_rowswap(d, a, b);
  }
  if (name == "random-haar") return random_haar(d, seed);
  if (name == "random-permutation-phase") return random_permutation_phase(d, seed);
  throw InputError("unknown fixture generator '" + std::string(name) + "'");
}

}  // namespace cgp::fixtures
