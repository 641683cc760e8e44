#include "wavelab/box_domain.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavelab {

BoxDomain::BoxDomain(std::vector<double> lengths, std::vector<int> resolution)
    : lengths_(std::move(lengths)), res_(std::move(resolution)) {
  const std::size_t d = lengths_.size();
  if (d < 1 || d > 3)
    throw std::invalid_argument("BoxDomain: dims must be 1, 2 or 3, got " +
                                std::to_string(d));
  if (res_.size() != d)
    throw std::invalid_argument("BoxDomain: lengths/resolution rank mismatch");
  for (std::size_t i = 0; i < d; ++i) {
    if (!(lengths_[i] > 0.0))
      throw std::invalid_argument("BoxDomain: lengths must be positive");
    if (res_[i] < 4)
      throw std::invalid_argument("BoxDomain: resolution must be >= 4 per axis");
  }

  size_ = 1;
  cell_volume_ = 1.0;
  mode_volume_ = 1.0;
  lambda_sq_ = 0.0;
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < d; ++i) {
    size_ *= static_cast<std::size_t>(res_[i]);
    cell_volume_ *= lengths_[i] / (res_[i] + 1);
    mode_volume_ *= 0.5 * lengths_[i];
    lambda_sq_ += (pi / lengths_[i]) * (pi / lengths_[i]);
  }

  // Per-axis 1-D eigenvalues (k pi / L)^2, then the row-major tensor sum.
  std::vector<std::vector<double>> axis(d);
  for (std::size_t i = 0; i < d; ++i) {
    axis[i].resize(res_[i]);
    for (int k = 1; k <= res_[i]; ++k) {
      const double w = k * pi / lengths_[i];
      axis[i][k - 1] = w * w;
    }
  }
  eig_.resize(size_);
  std::vector<int> idx(d, 0);
  for (std::size_t flat = 0; flat < size_; ++flat) {
    double e = 0.0;
    for (std::size_t i = 0; i < d; ++i) e += axis[i][idx[i]];
    eig_[flat] = e;
    for (std::size_t i = d; i-- > 0;) {
      if (++idx[i] < res_[i]) break;
      idx[i] = 0;
    }
  }
}

std::size_t BoxDomain::mode_index(const std::vector<int>& k) const {
  if (k.size() != lengths_.size())
    throw std::invalid_argument("mode_index: rank mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || k[i] > res_[i])
      throw std::invalid_argument("mode_index: component out of range");
    flat = flat * static_cast<std::size_t>(res_[i]) +
           static_cast<std::size_t>(k[i] - 1);
  }
  return flat;
}

double lp_norm(const Field& f, const BoxDomain& d, double p) {
  if (f.size() != d.size())
    throw std::invalid_argument("lp_norm: field does not match domain grid");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : f.values) m = std::max(m, std::abs(x));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: requires p >= 1");
  double s = 0.0;
  if (p == 2.0) {
    for (double x : f.values) s += x * x;
    return std::sqrt(s * d.cell_volume());
  }
  for (double x : f.values) s += std::pow(std::abs(x), p);
  return std::pow(s * d.cell_volume(), 1.0 / p);
}

double seminorm_sq(const SpectralField& s, const BoxDomain& d, int order) {
  if (s.size() != d.size())
    throw std::invalid_argument("seminorm_sq: field does not match domain grid");
  if (order < 1 || order > 3)
    throw std::invalid_argument("seminorm_sq: order must be 1, 2 or 3");
  const std::vector<double>& eig = d.laplace_eigenvalues();
  double acc = 0.0;
  switch (order) {
    case 1:
      for (std::size_t i = 0; i < s.size(); ++i)
        acc += eig[i] * s[i] * s[i];
      break;
    case 2:
      for (std::size_t i = 0; i < s.size(); ++i)
        acc += eig[i] * eig[i] * s[i] * s[i];
      break;
    default:
      for (std::size_t i = 0; i < s.size(); ++i)
        acc += eig[i] * eig[i] * eig[i] * s[i] * s[i];
      break;
  }
  return acc * d.mode_volume();
}

}  // namespace wavelab
