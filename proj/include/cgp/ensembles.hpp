#pragma once

// Seedable samplers: Haar unitaries, Haar pure states, and the flat measure
// on the probability simplex.
//
// Every sample index gets its own stream derived from (seed, index), so a
// batch is reproducible bit-for-bit no matter how it is split across threads.

#include <cstdint>
#include <limits>
#include <vector>

#include "cgp/matrix_core.hpp"

namespace cgp {

struct RngSeed {
  std::uint64_t value = 0;
};

/// SplitMix64 generator. Cheap to construct, so one stream per sample is affordable.
class SampleStream {
 public:
  using result_type = std::uint64_t;

  explicit SampleStream(std::uint64_t state) : state_(state) {}

  /// Independent stream for sample `index` of a batch seeded by `seed`.
  static SampleStream derive(RngSeed seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Deterministic sub-seed, e.g. one per dimension of a multi-dimension sweep.
RngSeed derive_seed(RngSeed seed, std::uint64_t tag);

/// Probability vector on the (d-1)-simplex.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> probs, double tol = kExactTol);

  int dim() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  /// diag(p_1, ..., p_d)
  CMat as_diagonal_state() const;

 private:
  std::vector<double> probs_;
};

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases of diag(R) moved into Q.
CMat haar_unitary(int d, SampleStream& rng);

/// Haar-distributed unit vector (normalized complex Gaussian vector).
PureState haar_state(int d, SampleStream& rng);

/// Flat Dirichlet sample: d unit-rate exponentials, normalized.
SimplexPoint uniform_simplex(int d, SampleStream& rng);

/// (|<i|psi>|^2)_i for a Haar state psi.
SimplexPoint dephased_haar_diagonal(int d, SampleStream& rng);

}  // namespace cgp
