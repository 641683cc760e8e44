#ifndef WAVELAB_BOX_DOMAIN_HPP
#define WAVELAB_BOX_DOMAIN_HPP

#include <cstddef>
#include <vector>

namespace wavelab {

/// Rectangular box (0,L_1) x ... x (0,L_d), d in {1,2,3}, discretized by
/// the interior nodes x_i = j*h_i, j = 1..n_i, h_i = L_i/(n_i+1), with
/// homogeneous Dirichlet values implicit on the boundary. The tensor sine
/// modes sin(k_i pi x_i / L_i) are exactly orthogonal in the discrete
/// inner product on this grid and diagonalize -Laplace as well as its
/// square under the hinged conditions y = Laplace y = 0.
class BoxDomain {
 public:
  /// Throws std::invalid_argument unless 1 <= dims <= 3, lengths > 0 and
  /// every resolution entry is >= 4.
  BoxDomain(std::vector<double> lengths, std::vector<int> resolution);

  int dims() const { return static_cast<int>(lengths_.size()); }
  const std::vector<double>& lengths() const { return lengths_; }
  const std::vector<int>& resolution() const { return res_; }

  double spacing(int axis) const { return lengths_[axis] / (res_[axis] + 1); }
  /// Interior node coordinate along one axis, j = 0..n_i-1 maps to (j+1)h.
  double coordinate(int axis, int j) const { return (j + 1) * spacing(axis); }

  /// Number of interior grid points = number of sine modes.
  std::size_t size() const { return size_; }
  /// Quadrature weight of one cell, prod_i h_i.
  double cell_volume() const { return cell_volume_; }
  /// prod_i L_i/2 = squared L2 norm of one tensor sine mode.
  double mode_volume() const { return mode_volume_; }

  /// Eigenvalues of -Laplace on the sine modes, sum_i (k_i pi / L_i)^2,
  /// stored row-major in mode-index order (k_i = 1..n_i). The hinged
  /// bilaplacian eigenvalues are the squares of these entries.
  const std::vector<double>& laplace_eigenvalues() const { return eig_; }
  /// First Dirichlet eigenvalue, pi^2 * sum_i 1/L_i^2.
  double lambda_sq() const { return lambda_sq_; }

  /// Flat index of a mode multi-index (entries 1..n_i); throws on range.
  std::size_t mode_index(const std::vector<int>& k) const;

  bool same_grid(const BoxDomain& other) const {
    return lengths_ == other.lengths_ && res_ == other.res_;
  }

 private:
  std::vector<double> lengths_;
  std::vector<int> res_;
  std::vector<double> eig_;
  std::size_t size_ = 0;
  double cell_volume_ = 0;
  double mode_volume_ = 0;
  double lambda_sq_ = 0;
};

/// Real values at the interior grid points, boundary implicitly zero,
/// row-major per-axis layout (axis 0 slowest).
struct Field {
  std::vector<double> values;

  Field() = default;
  explicit Field(std::size_t n) : values(n, 0.0) {}
  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Coefficients c_k of the tensor sine expansion
///   f(x) = sum_k c_k prod_i sin(k_i pi x_i / L_i),
/// in the same row-major mode order as BoxDomain::laplace_eigenvalues().
/// With this normalization |f|_2^2 = mode_volume() * sum_k c_k^2.
struct SpectralField {
  std::vector<double> coeffs;

  SpectralField() = default;
  explicit SpectralField(std::size_t n) : coeffs(n, 0.0) {}
  std::size_t size() const { return coeffs.size(); }
  double& operator[](std::size_t i) { return coeffs[i]; }
  double operator[](std::size_t i) const { return coeffs[i]; }
};

/// L^p norm by the rectangle rule over interior nodes,
/// (sum |f|^p prod h_i)^{1/p}; p = infinity gives the max norm.
/// Throws for p < 1 or a field/domain size mismatch.
double lp_norm(const Field& f, const BoxDomain& d, double p);

/// Squared spectral seminorms: order 1 -> |grad f|_2^2, order 2 ->
/// |Laplace f|_2^2, order 3 -> |grad Laplace f|_2^2, evaluated as
/// mode_volume * sum eig^order c_k^2. Throws for order outside {1,2,3}.
double seminorm_sq(const SpectralField& s, const BoxDomain& d, int order);

}  // namespace wavelab

#endif
