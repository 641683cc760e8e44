#include "wavelab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

double inner_l2(const SpectralField& a, const SpectralField& b,
                const BoxDomain& d) {
  if (a.size() != d.size() || b.size() != d.size())
    throw std::invalid_argument("inner_l2: field does not match domain grid");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s * d.mode_volume();
}

double energy(const State& s, const BoxDomain& d, OperatorKind op) {
  if (s.y.size() != d.size() || s.v.size() != d.size())
    throw std::invalid_argument("energy: state does not match domain grid");
  const std::vector<double>& eig = d.laplace_eigenvalues();
  double acc = 0.0;
  if (op == OperatorKind::wave) {
    for (std::size_t i = 0; i < eig.size(); ++i)
      acc += s.v[i] * s.v[i] + eig[i] * s.y[i] * s.y[i];
  } else {
    for (std::size_t i = 0; i < eig.size(); ++i)
      acc += s.v[i] * s.v[i] + eig[i] * eig[i] * s.y[i] * s.y[i];
  }
  return 0.5 * acc * d.mode_volume();
}

double f_functional(const State& s, const BoxDomain& d, OperatorKind op) {
  if (s.y.size() != d.size() || s.v.size() != d.size())
    throw std::invalid_argument("f_functional: state does not match domain grid");
  const std::vector<double>& eig = d.laplace_eigenvalues();
  double acc = 0.0;
  if (op == OperatorKind::wave) {
    for (std::size_t i = 0; i < eig.size(); ++i)
      acc += eig[i] * (s.v[i] * s.v[i] + eig[i] * s.y[i] * s.y[i]);
    return acc * d.mode_volume();
  }
  for (std::size_t i = 0; i < eig.size(); ++i)
    acc += eig[i] * (s.v[i] * s.v[i] + eig[i] * eig[i] * s.y[i] * s.y[i]);
  return 0.5 * acc * d.mode_volume();
}

double perturbed_energy(const State& s, double eps, double mu,
                        double weight_derivative, const BoxDomain& d,
                        OperatorKind op) {
  const double e = energy(s, d, op);
  if (eps == 0.0) return e;
  return e + eps * weight_derivative * std::pow(e, mu) * inner_l2(s.y, s.v, d);
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
  }
  return "?";
}

std::string to_string(BoundKind k) {
  return k == BoundKind::power ? "power" : "log";
}

double weight_phi(WeightKind w, double t) {
  return w == WeightKind::linear ? t : std::log(2.0 + t) - std::log(2.0);
}

double weight_phi_prime(WeightKind w, double t) {
  return w == WeightKind::linear ? 1.0 : 1.0 / (2.0 + t);
}

namespace {

Regime regime_of(double p, int dim, OperatorKind op) {
  // Criticality of the Sobolev embedding: (N-2)p vs 2N for H^1 (wave),
  // (N-4)p vs 2N for H^2 (plate).
  const int shift = op == OperatorKind::wave ? 2 : 4;
  const double lhs = (dim - shift) * p;
  const double rhs = 2.0 * dim;
  if (lhs < rhs) return Regime::subcritical;
  if (lhs == rhs) return Regime::critical;
  return Regime::supercritical;
}

double power_mu(double p, int dim, OperatorKind op) {
  const int shift = op == OperatorKind::wave ? 4 : 6;
  const double ratio = (dim - shift) / (static_cast<double>(shift) * (p - 1.0));
  return 0.5 * (p - 2.0) * std::max(1.0, ratio);
}

}  // namespace

ExponentReport mu_exponents(double p, int dim, std::optional<double> q,
                            OperatorKind op) {
  if (!(p > 2.0)) throw std::invalid_argument("mu_exponents: requires p > 2");
  if (dim < 1) throw std::invalid_argument("mu_exponents: requires dim >= 1");
  if (q && !(*q > p)) throw std::invalid_argument("mu_exponents: requires q > p");
  if (q && op != OperatorKind::wave)
    throw std::invalid_argument(
        "mu_exponents: two-term damping exponents are defined for the wave "
        "operator only");

  ExponentReport r;
  r.p = p;
  r.q = q;
  r.dim = dim;
  r.op = op;
  r.mu_p = std::max(0.5 * (p - 2.0), 1.0 / (p - 1.0));
  r.mu_p_dim = power_mu(p, dim, op);
  r.regime = regime_of(p, dim, op);

  const int adm_shift = op == OperatorKind::wave ? 4 : 6;
  r.strong_admissible = (dim - adm_shift) * p <= 2.0 * dim;
  if ((dim - 4) * p <= 2.0 * dim) r.gn_delta = gn_delta(p, dim);

  double power_mu_used = r.mu_p_dim;
  double log_mu_used = r.mu_p;
  if (q) {
    r.mu_p_q = std::max(0.5 * (p - 2.0), 1.0 / (*q - 1.0));
    r.mu_p_q_dim =
        std::max(0.5 * (p - 2.0), (*q - 2.0) * (dim - 4) / (8.0 * (*q - 1.0)));
    r.q_strong_admissible = (dim - 4) * *q <= 2.0 * dim;
    r.p_dominant = (*q - 2.0) * (dim - 4) <= 4.0 * (p - 2.0) * (*q - 1.0);
    power_mu_used = *r.mu_p_q_dim;
    log_mu_used = *r.mu_p_q;
  }
  // Below criticality the classical rate 2/(p-2) applies without any
  // regularity condition; the mu-based exponent is the supercritical one.
  r.power_decay_exponent = r.regime == Regime::supercritical
                               ? 1.0 / power_mu_used
                               : 2.0 / (p - 2.0);
  r.log_decay_exponent = 1.0 / log_mu_used;
  return r;
}

double gn_delta(double p, int dim) {
  if (!(p > 2.0)) throw std::invalid_argument("gn_delta: requires p > 2");
  if (dim < 1) throw std::invalid_argument("gn_delta: requires dim >= 1");
  if ((dim - 4) * p > 2.0 * dim)
    throw std::invalid_argument(
        "gn_delta: embedding requires (N-4)p <= 2N");
  return dim * (p - 2.0) / (4.0 * p);
}

double lp_growth_bound(double t, double y0_norm, double e0, double coeff,
                       double power) {
  if (!(coeff > 0.0))
    throw std::invalid_argument("lp_growth_bound: requires coeff > 0");
  if (!(power > 2.0))
    throw std::invalid_argument("lp_growth_bound: requires power > 2");
  if (t < 0.0 || y0_norm < 0.0 || e0 < 0.0)
    throw std::invalid_argument("lp_growth_bound: negative input");
  const double ex = (power - 1.0) / power;
  return std::pow(2.0, ex) *
         (y0_norm + std::pow(coeff, -1.0 / power) * std::pow(t, ex) *
                        std::pow(e0, 1.0 / power));
}

double bound_curve(double t, BoundKind kind, double constant, double exponent) {
  if (!(constant > 0.0))
    throw std::invalid_argument("bound_curve: requires K > 0");
  if (!(exponent > 0.0))
    throw std::invalid_argument("bound_curve: requires exponent > 0");
  if (kind == BoundKind::power)
    return constant * std::pow(1.0 + t, -exponent);
  return constant * std::pow(std::log(2.0 + t), -exponent);
}

}  // namespace wavelab
