#pragma once

#include <span>
#include <vector>

#include "cgp/matrix_core.hpp"

namespace cgp {

/// Unital, trace-preserving CP map E(x) = sum_k A_k x A_k^dagger.
/// Both sum_k A_k^dagger A_k = I and sum_k A_k A_k^dagger = I are checked on construction.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMat> kraus, double tol = kStructuralTol);

  static KrausChannel from_unitary(const CMat& u, double tol = kStructuralTol);

  int dim() const { return dim_; }
  std::span<const CMat> kraus() const { return kraus_; }
  std::size_t size() const { return kraus_.size(); }

  CMat apply(const CMat& x) const;

 private:
  int dim_ = 0;
  std::vector<CMat> kraus_;
};

/// outer o inner, with Kraus operators {B_j A_k}.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

}  // namespace cgp
