#pragma once

// Weak measurement, two-qutrit density assembly and measurement reversal.
//
// Single-atom level order is {|C>, |B>, |A>}; the two-atom basis index is
// 3 * level(atom 1) + level(atom 2), i.e.
//   0 CC, 1 CB, 2 CA, 3 BC, 4 BB, 5 BA, 6 AC, 7 AB, 8 AA.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "vtype/types.hpp"

namespace vtype {

using Matrix9 = Eigen::Matrix<complex, 9, 9>;
using Matrix3 = Eigen::Matrix<complex, 3, 3>;

enum class Level : int { C = 0, B = 1, A = 2 };

constexpr int basis_index(Level atom1, Level atom2) {
  return 3 * static_cast<int>(atom1) + static_cast<int>(atom2);
}

/// Number of excited atoms in basis state i.
constexpr int excitation_count(int i) { return (i / 3 != 0 ? 1 : 0) + (i % 3 != 0 ? 1 : 0); }

/// Uniform strengths: every atom and both excited levels share p (and p_r).
struct MeasurementStrengths {
  double p = 0.0;
  double p_r = 0.0;

  void validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("p must satisfy 0 <= p <= 1, got " + std::to_string(p));
    }
    if (!(p_r >= 0.0 && p_r < 1.0)) {
      throw std::invalid_argument("p_r must satisfy 0 <= p_r < 1, got " + std::to_string(p_r));
    }
  }
};

/// How the state is normalized after the prior weak measurement.
///  - unnormalized: amplitudes scaled by sqrt(1-p); the lost weight shows up
///    as ground-state population and only the reversal step renormalizes.
///  - immediate: the post-measurement state is trace-normalized immediately.
///    For a pure single-excitation input this leaves the state unchanged.
enum class WeakNormalization { unnormalized, immediate };

/// Two-qutrit density matrix in the fixed basis above.
class DensityMatrix9 {
 public:
  DensityMatrix9() : m_(Matrix9::Zero()) { m_(0, 0) = 1.0; }
  explicit DensityMatrix9(Matrix9 m) : m_(std::move(m)) {}

  [[nodiscard]] const Matrix9& matrix() const { return m_; }
  [[nodiscard]] complex operator()(int i, int j) const { return m_(i, j); }
  [[nodiscard]] double population(int i) const { return m_(i, i).real(); }
  [[nodiscard]] double trace() const { return m_.trace().real(); }

 private:
  Matrix9 m_;
};

inline AmplitudeSet apply_weak_measurement(const AmplitudeSet& init, double p,
                                           WeakNormalization mode = WeakNormalization::unnormalized) {
  MeasurementStrengths{.p = p}.validate();
  const double excited = init.norm_squared();
  if (excited > 1.0 + kNormTolerance) {
    throw std::invalid_argument("amplitude norm exceeds 1");
  }
  double scale = std::sqrt(1.0 - p);
  if (mode == WeakNormalization::immediate) {
    const double kept = (1.0 - excited) + (1.0 - p) * excited;
    if (kept <= 1e-12) {
      throw std::domain_error("weak measurement annihilates the state; normalization is zero");
    }
    scale /= std::sqrt(kept);
  }
  return scale * init;
}

/// rho = |C_w|^2 |CC><CC| + |psi><psi| with psi the single-excitation part.
inline DensityMatrix9 assemble_density(const AmplitudeSet& amps) {
  const double excited = amps.norm_squared();
  if (!(excited <= 1.0 + kNormTolerance)) {
    throw std::invalid_argument("inconsistent amplitude set: sum |c|^2 = " + std::to_string(excited));
  }
  Eigen::Matrix<complex, 9, 1> psi = Eigen::Matrix<complex, 9, 1>::Zero();
  psi(basis_index(Level::C, Level::B)) = amps.c2b;
  psi(basis_index(Level::C, Level::A)) = amps.c2a;
  psi(basis_index(Level::B, Level::C)) = amps.c1b;
  psi(basis_index(Level::A, Level::C)) = amps.c1a;

  Matrix9 rho = psi * psi.adjoint();
  rho(0, 0) = 1.0 - excited;
  return DensityMatrix9(rho);
}

namespace detail {

inline void require_reversal_strength(double p_r) { MeasurementStrengths{.p_r = p_r}.validate(); }

// Diagonal weight of M_r^dagger M_r on basis state i: (1-p_r)^(4 - #excited).
inline double reversal_weight(int i, double p_r) {
  return std::pow(1.0 - p_r, 4 - excitation_count(i));
}

inline Matrix9 kron(const Matrix3& atom1, const Matrix3& atom2) {
  Matrix9 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.block<3, 3>(3 * i, 3 * j) = atom1(i, j) * atom2;
  }
  return out;
}

}  // namespace detail

/// Pre-normalization trace of M_r rho M_r^dagger.
inline double reversal_normalization(const DensityMatrix9& rho, double p_r) {
  detail::require_reversal_strength(p_r);
  double c2 = 0.0;
  for (int i = 0; i < 9; ++i) c2 += detail::reversal_weight(i, p_r) * rho.population(i);
  return c2;
}

inline DensityMatrix9 apply_reversal(const DensityMatrix9& rho, double p_r) {
  const double c2 = reversal_normalization(rho, p_r);
  if (!(c2 >= 1e-300)) {
    throw std::domain_error("degenerate reversal normalization C2 = " + std::to_string(c2));
  }
  std::array<double, 9> w{};
  for (int i = 0; i < 9; ++i) w[i] = std::sqrt(detail::reversal_weight(i, p_r));
  Matrix9 out;
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) out(i, j) = rho(i, j) * (w[i] * w[j] / c2);
  }
  return DensityMatrix9(out);
}

/// Probability that the reversal succeeds for state amps:
/// |C_w|^2 (1-p_r)^4 + sum|c|^2 (1-p_r)^3.
inline double success_probability(const AmplitudeSet& amps, double p_r) {
  detail::require_reversal_strength(p_r);
  const double excited = amps.norm_squared();
  const double q = 1.0 - p_r;
  return (1.0 - excited) * q * q * q * q + excited * q * q * q;
}

/// Full 9x9 weak-measurement operator, Kronecker product of per-atom
/// diag(1, sqrt(1-p), sqrt(1-p)).
inline Matrix9 weak_measurement_operator(double p) {
  MeasurementStrengths{.p = p}.validate();
  Matrix3 single = Matrix3::Zero();
  single(0, 0) = 1.0;
  single(1, 1) = single(2, 2) = std::sqrt(1.0 - p);
  return detail::kron(single, single);
}

/// Full 9x9 reversal operator, Kronecker product of per-atom
/// diag(1-p_r, sqrt(1-p_r), sqrt(1-p_r)).
inline Matrix9 reversal_operator(double p_r) {
  detail::require_reversal_strength(p_r);
  Matrix3 single = Matrix3::Zero();
  single(0, 0) = 1.0 - p_r;
  single(1, 1) = single(2, 2) = std::sqrt(1.0 - p_r);
  return detail::kron(single, single);
}

}  // namespace vtype
