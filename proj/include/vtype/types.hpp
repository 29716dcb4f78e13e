#pragma once

// Core value types shared by every stage of the two-atom pipeline.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace vtype {

using complex = std::complex<double>;

/// Physical parameters of two identical, degenerate V-type atoms resonant
/// with a cavity whose reservoir has a Lorentzian spectrum.
///
/// gamma0 is the excited-state decay rate and sets the unit of time. kappa is
/// the Lorentzian half-width (cavity-reservoir coupling), theta the
/// spontaneously generated interference between the two decay channels and
/// delta the cavity/reservoir detuning.
struct SystemParams {
  double gamma0 = 1.0;
  double kappa = 1.0;
  double theta = 0.0;
  double delta = 0.0;

  void validate() const {
    if (!(std::isfinite(gamma0) && gamma0 > 0.0)) {
      throw std::invalid_argument("gamma0 must be finite and > 0");
    }
    if (!(std::isfinite(kappa) && kappa > 0.0)) {
      throw std::invalid_argument("kappa must be finite and > 0");
    }
    if (!(std::isfinite(theta) && std::abs(theta) <= 1.0)) {
      throw std::invalid_argument("theta must satisfy |theta| <= 1");
    }
    if (!std::isfinite(delta)) {
      throw std::invalid_argument("delta must be finite");
    }
  }

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Single-excitation amplitudes. c1a is atom 1 in |A>, c2b atom 2 in |B>,
/// the other atom in the ground state |C> and the environment in vacuum.
/// The environment-excited weight is 1 - norm_squared().
struct AmplitudeSet {
  complex c1a{};
  complex c1b{};
  complex c2a{};
  complex c2b{};

  [[nodiscard]] double norm_squared() const {
    return std::norm(c1a) + std::norm(c1b) + std::norm(c2a) + std::norm(c2b);
  }

  [[nodiscard]] std::array<complex, 4> as_array() const { return {c1a, c1b, c2a, c2b}; }

  /// Relabel atom 1 <-> atom 2.
  [[nodiscard]] AmplitudeSet swapped_atoms() const { return {c2a, c2b, c1a, c1b}; }

  friend AmplitudeSet operator+(const AmplitudeSet& x, const AmplitudeSet& y) {
    return {x.c1a + y.c1a, x.c1b + y.c1b, x.c2a + y.c2a, x.c2b + y.c2b};
  }
  friend AmplitudeSet operator*(complex s, const AmplitudeSet& x) {
    return {s * x.c1a, s * x.c1b, s * x.c2a, s * x.c2b};
  }

  friend bool operator==(const AmplitudeSet&, const AmplitudeSet&) = default;
};

inline constexpr double kNormTolerance = 1e-9;

/// (|C1 A2> + |B1 C2>)/sqrt(2)
inline AmplitudeSet bell_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return {.c1a = 0.0, .c1b = h, .c2a = h, .c2b = 0.0};
}

/// |B1 C2>
inline AmplitudeSet product_state() { return {.c1a = 0.0, .c1b = 1.0, .c2a = 0.0, .c2b = 0.0}; }

inline void require_time(double t) {
  if (!(std::isfinite(t) && t >= 0.0)) {
    throw std::domain_error("time must be finite and >= 0, got " + std::to_string(t));
  }
}

}  // namespace vtype
