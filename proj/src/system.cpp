#include "wavelab/system.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

void DampingSpec::validate() const {
  switch (kind) {
    case DampingKind::none:
      return;
    case DampingKind::single:
      if (!(c > 0.0)) throw std::invalid_argument("damping: requires c > 0");
      if (!(p > 2.0)) throw std::invalid_argument("damping: requires p > 2");
      return;
    case DampingKind::dual:
      if (!(a > 0.0)) throw std::invalid_argument("damping: requires a > 0");
      if (!(b > 0.0)) throw std::invalid_argument("damping: requires b > 0");
      if (!(p > 2.0)) throw std::invalid_argument("damping: requires p > 2");
      if (!(q > p)) throw std::invalid_argument("damping: requires q > p");
      return;
  }
  throw std::invalid_argument("damping: unknown kind");
}

double modal_frequency(double laplace_eig, OperatorKind op) {
  return op == OperatorKind::wave ? std::sqrt(laplace_eig) : laplace_eig;
}

double poincare_lambda(const BoxDomain& d, OperatorKind op) {
  return op == OperatorKind::wave ? std::sqrt(d.lambda_sq()) : d.lambda_sq();
}

}  // namespace wavelab
