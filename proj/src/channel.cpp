#include "cgp/channel.hpp"

#include <string>

#include "cgp/errors.hpp"

namespace cgp {

KrausChannel::KrausChannel(std::vector<CMat> kraus, double tol) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InputError("Kraus channel needs at least one operator");
  require_square(kraus_.front(), "Kraus operator 0");
  dim_ = static_cast<int>(kraus_.front().rows());
  CMat tp = CMat::Zero(dim_, dim_);
  CMat unital = CMat::Zero(dim_, dim_);
  for (std::size_t k = 0; k < kraus_.size(); ++k) {
    const CMat& a = kraus_[k];
    const std::string name = "Kraus operator " + std::to_string(k);
    require_square(a, name);
    if (a.rows() != dim_) throw InputError(name + " has a different dimension");
    require_finite(a, name);
    tp += a.adjoint() * a;
    unital += a * a.adjoint();
  }
  const CMat id = CMat::Identity(dim_, dim_);
  if ((tp - id).norm() > tol) throw InputError("Kraus operators are not trace preserving");
  if ((unital - id).norm() > tol) throw InputError("Kraus channel is not unital");
}

KrausChannel KrausChannel::from_unitary(const CMat& u, double tol) {
  return KrausChannel(std::vector<CMat>{u}, tol);
}

CMat KrausChannel::apply(const CMat& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw InputError("channel input has wrong dimension");
  CMat out = CMat::Zero(dim_, dim_);
  for (const auto& a : kraus_) out.noalias() += a * x * a.adjoint();
  return out;
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (outer.dim() != inner.dim()) throw InputError("compose: dimension mismatch");
  std::vector<CMat> ops;
  ops.reserve(outer.size() * inner.size());
  for (const auto& b : outer.kraus()) {
    for (const auto& a : inner.kraus()) ops.emplace_back(b * a);
  }
  return KrausChannel(std::move(ops));
}

}  // namespace cgp
