#ifndef WAVELAB_FUNCTIONALS_HPP
#define WAVELAB_FUNCTIONALS_HPP

#include <optional>
#include <string>

#include "wavelab/system.hpp"

namespace wavelab {

/// L2 inner product of two spectral fields, mode_volume * sum a_k b_k.
double inner_l2(const SpectralField& a, const SpectralField& b,
                const BoxDomain& d);

/// Energy E = 1/2 int |y_t|^2 + |grad y|^2 (wave) resp. |Laplace y|^2
/// (plate), evaluated spectrally as 1/2 sum (v_k^2 + omega_k^2 y_k^2)
/// times mode_volume.
double energy(const State& s, const BoxDomain& d, OperatorKind op);

/// Higher-order functional:
///   wave:  F = int |grad y_t|^2 + |Laplace y|^2
///   plate: F = 1/2 int |grad y_t|^2 + |grad Laplace y|^2
double f_functional(const State& s, const BoxDomain& d, OperatorKind op);

/// Perturbed energy E + eps * weight_derivative * E^mu * <y, y_t>_{L2};
/// weight_derivative = 1 gives the unweighted variant.
double perturbed_energy(const State& s, double eps, double mu,
                        double weight_derivative, const BoxDomain& d,
                        OperatorKind op);

/// One row of a recorded trajectory. `dissipated` is the cumulative
/// damping-power quadrature D(t) = int_0^t int a|y_t|^p + b|y_t|^q.
struct TrajectoryRecord {
  double t = 0.0;
  double energy = 0.0;
  double dissipated = 0.0;
  std::optional<double> f;
  std::optional<double> lp;
  std::optional<double> lq;
  std::optional<double> e_eps;
};

/// A generic (t, value) pair for fits and inequality checks.
struct Sample {
  double t = 0.0;
  double value = 0.0;
};

enum class Regime { subcritical, critical, supercritical };
std::string to_string(Regime r);

/// Weight functions admissible in the decay machinery: phi(0) = 0,
/// strictly increasing, phi -> infinity. logshift is additionally concave
/// with (1+t) phi' <= 1.
enum class WeightKind { linear, logshift };
double weight_phi(WeightKind w, double t);
double weight_phi_prime(WeightKind w, double t);

/// Decay exponents and admissibility switches for a damping configuration.
/// All mu values are reciprocals of predicted decay exponents:
///   mu_p      = max{(p-2)/2, 1/(p-1)}                   (log bound)
///   mu_p_dim  = (p-2)/2 * max{1, (N-4)/(4(p-1))}        (wave power bound)
///               (p-2)/2 * max{1, (N-6)/(6(p-1))}        (plate power bound)
///   mu_p_q    = max{(p-2)/2, 1/(q-1)}                   (dual log bound)
///   mu_p_q_dim= max{(p-2)/2, (q-2)(N-4)/(8(q-1))}       (dual power bound)
struct ExponentReport {
  double p = 0.0;
  std::optional<double> q;
  int dim = 0;
  OperatorKind op = OperatorKind::wave;
  double mu_p = 0.0;
  double mu_p_dim = 0.0;
  std::optional<double> mu_p_q;
  std::optional<double> mu_p_q_dim;
  std::optional<double> gn_delta;
  Regime regime = Regime::subcritical;
  bool strong_admissible = false;
  std::optional<bool> q_strong_admissible;
  std::optional<bool> p_dominant;
  double power_decay_exponent = 0.0;
  double log_decay_exponent = 0.0;
};

/// Computes every applicable exponent for damping power p (and q for the
/// two-term damping) in dimension dim. Throws for p <= 2, q <= p, or a
/// dual spec combined with the plate operator (no such theorem family).
ExponentReport mu_exponents(double p, int dim,
                            std::optional<double> q = std::nullopt,
                            OperatorKind op = OperatorKind::wave);

/// Gagliardo-Nirenberg interpolation exponent delta = N(p-2)/(4p) for
/// |v|_p <= C ||v||_{H^2}^delta |v|_2^{1-delta}. Requires p > 2 and the
/// embedding condition (N-4)p <= 2N.
double gn_delta(double p, int dim);

/// L^p growth bound 2^{(p-1)/p} (|y0|_p + coeff^{-1/p} t^{(p-1)/p} E0^{1/p}).
double lp_growth_bound(double t, double y0_norm, double e0, double coeff,
                       double power);

enum class BoundKind { power, log };
std::string to_string(BoundKind k);

/// K (1+t)^{-e} or K (log(2+t))^{-e}.
double bound_curve(double t, BoundKind kind, double constant, double exponent);

}  // namespace wavelab

#endif
