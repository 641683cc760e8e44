#ifndef WAVELAB_SINE_TRANSFORM_HPP
#define WAVELAB_SINE_TRANSFORM_HPP

#include <memory>

#include "wavelab/box_domain.hpp"

namespace wavelab {

/// Tensor DST-I between interior grid samples and sine-mode coefficients.
///
/// Conventions (see SpectralField): inverse() is plain synthesis,
///   f_j = sum_k c_k prod_i sin(k_i pi j_i / (n_i+1)),
/// and forward() recovers the coefficients via the discrete orthogonality
///   sum_{j=1}^{n} sin(j k pi/(n+1)) sin(j m pi/(n+1)) = (n+1)/2 delta_km,
/// i.e. c = DST(f) * prod_i 2/(n_i+1). Parseval then reads
///   |f|_2^2 = cell_volume * sum_j f_j^2 = mode_volume * sum_k c_k^2.
///
/// Instances cache FFTW plans and a scratch buffer; one instance must not
/// be shared between threads, but distinct instances may run concurrently.
class SineTransform {
 public:
  explicit SineTransform(const BoxDomain& d);
  ~SineTransform();
  SineTransform(SineTransform&&) noexcept;
  SineTransform& operator=(SineTransform&&) noexcept;
  SineTransform(const SineTransform&) = delete;
  SineTransform& operator=(const SineTransform&) = delete;

  void forward(const Field& f, SpectralField& out) const;
  void inverse(const SpectralField& s, Field& out) const;

  SpectralField forward(const Field& f) const;
  Field inverse(const SpectralField& s) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience one-shot transforms (plan per call; use SineTransform in
/// time-stepping loops).
SpectralField forward_transform(const Field& f, const BoxDomain& d);
Field inverse_transform(const SpectralField& s, const BoxDomain& d);

}  // namespace wavelab

#endif
