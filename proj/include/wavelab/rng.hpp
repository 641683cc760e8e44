#ifndef WAVELAB_RNG_HPP
#define WAVELAB_RNG_HPP

#include <cstdint>
#include <random>

namespace wavelab {

/// Deterministic standard-normal source. Box-Muller over mt19937_64 keeps
/// the stream independent of the standard library's distribution
/// implementation, so identical seeds give identical fields everywhere.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

  double operator()();

 private:
  double uniform01();  // in (0, 1]

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wavelab

#endif
