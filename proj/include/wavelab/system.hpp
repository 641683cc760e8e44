#ifndef WAVELAB_SYSTEM_HPP
#define WAVELAB_SYSTEM_HPP

#include <cstdint>

#include "wavelab/box_domain.hpp"

namespace wavelab {

/// Spatial operator: y_tt - Laplace y (wave) or y_tt + Laplace^2 y with
/// hinged conditions y = Laplace y = 0 (plate). Both are diagonal in the
/// sine basis of a BoxDomain.
enum class OperatorKind { wave, hinged_plate };

enum class DampingKind { none, single, dual };

/// Pointwise velocity damping g(v):
///   single: c |v|^{p-2} v              (c > 0, p > 2)
///   dual:   a |v|^{p-2} v + b |v|^{q-2} v   (a,b > 0, q > p > 2)
struct DampingSpec {
  DampingKind kind = DampingKind::none;
  double c = 0.0;
  double p = 0.0;
  double a = 0.0;
  double b = 0.0;
  double q = 0.0;

  static DampingSpec none() { return {}; }
  static DampingSpec single(double c, double p) {
    DampingSpec s;
    s.kind = DampingKind::single;
    s.c = c;
    s.p = p;
    return s;
  }
  static DampingSpec dual(double a, double p, double b, double q) {
    DampingSpec s;
    s.kind = DampingKind::dual;
    s.a = a;
    s.p = p;
    s.b = b;
    s.q = q;
    return s;
  }

  /// Throws std::invalid_argument on violated parameter constraints.
  void validate() const;
};

/// Displacement/velocity pair in spectral representation.
struct State {
  double t = 0.0;
  SpectralField y;
  SpectralField v;
};

/// Modal frequency of the conservative part: sqrt(eig) for the wave
/// operator, eig for the hinged plate (square root of the bilaplacian
/// eigenvalue eig^2).
double modal_frequency(double laplace_eig, OperatorKind op);

/// Poincare-type constant lambda with |y|_2 <= |Ay|_2 / lambda, where A is
/// grad (wave) or Laplace (plate): sqrt(lambda_sq) resp. lambda_sq.
double poincare_lambda(const BoxDomain& d, OperatorKind op);

}  // namespace wavelab

#endif
