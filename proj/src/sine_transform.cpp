#include "wavelab/sine_transform.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace wavelab {

namespace {
// FFTW planning mutates global state and is not thread-safe.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct SineTransform::Impl {
  std::size_t n = 0;
  double forward_scale = 1.0;  // prod_i 1/(n_i+1): RODFT00 carries 2 sin(..)
  double inverse_scale = 1.0;  // 1/2^d
  double* buf = nullptr;
  fftw_plan plan = nullptr;

  explicit Impl(const BoxDomain& d) {
    n = d.size();
    const int dims = d.dims();
    int sizes[3] = {1, 1, 1};
    fftw_r2r_kind kinds[3] = {FFTW_RODFT00, FFTW_RODFT00, FFTW_RODFT00};
    for (int i = 0; i < dims; ++i) {
      sizes[i] = d.resolution()[i];
      forward_scale /= sizes[i] + 1;
      inverse_scale *= 0.5;
    }
    buf = fftw_alloc_real(n);
    if (buf == nullptr) throw std::bad_alloc();
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_r2r(dims, sizes, buf, buf, kinds, FFTW_ESTIMATE);
    if (plan == nullptr) {
      fftw_free(buf);
      throw std::runtime_error("SineTransform: FFTW planning failed");
    }
  }

  ~Impl() {
    if (plan != nullptr) {
      std::lock_guard<std::mutex> lock(plan_mutex());
      fftw_destroy_plan(plan);
    }
    if (buf != nullptr) fftw_free(buf);
  }

  void execute(const double* in, double* out, double scale) const {
    std::memcpy(buf, in, n * sizeof(double));
    fftw_execute(plan);
    for (std::size_t i = 0; i < n; ++i) out[i] = buf[i] * scale;
  }
};

SineTransform::SineTransform(const BoxDomain& d)
    : impl_(std::make_unique<Impl>(d)) {}
SineTransform::~SineTransform() = default;
SineTransform::SineTransform(SineTransform&&) noexcept = default;
SineTransform& SineTransform::operator=(SineTransform&&) noexcept = default;

void SineTransform::forward(const Field& f, SpectralField& out) const {
  if (f.size() != impl_->n)
    throw std::invalid_argument("forward: field does not match domain grid");
  out.coeffs.resize(impl_->n);
  impl_->execute(f.values.data(), out.coeffs.data(), impl_->forward_scale);
}

void SineTransform::inverse(const SpectralField& s, Field& out) const {
  if (s.size() != impl_->n)
    throw std::invalid_argument("inverse: coefficients do not match domain grid");
  out.values.resize(impl_->n);
  impl_->execute(s.coeffs.data(), out.values.data(), impl_->inverse_scale);
}

SpectralField SineTransform::forward(const Field& f) const {
  SpectralField s;
  forward(f, s);
  return s;
}

Field SineTransform::inverse(const SpectralField& s) const {
  Field f;
  inverse(s, f);
  return f;
}

SpectralField forward_transform(const Field& f, const BoxDomain& d) {
  return SineTransform(d).forward(f);
}

Field inverse_transform(const SpectralField& s, const BoxDomain& d) {
  return SineTransform(d).inverse(s);
}

}  // namespace wavelab
