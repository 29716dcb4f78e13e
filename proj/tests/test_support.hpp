#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "vtype/types.hpp"

namespace vtype::testing {

/// Seeded generator of random valid amplitude sets (sum |c|^2 <= 1).
class AmplitudeGenerator {
 public:
  explicit AmplitudeGenerator(unsigned seed) : rng_(seed) {}

  complex gaussian() { return {normal_(rng_), normal_(rng_)}; }

  AmplitudeSet next(double max_norm = 1.0) {
    AmplitudeSet a{gaussian(), gaussian(), gaussian(), gaussian()};
    const double target = max_norm * uniform_(rng_);
    return std::sqrt(target / a.norm_squared()) * a;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

inline double max_abs_diff(const AmplitudeSet& x, const AmplitudeSet& y) {
  const auto a = x.as_array();
  const auto b = y.as_array();
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace vtype::testing
