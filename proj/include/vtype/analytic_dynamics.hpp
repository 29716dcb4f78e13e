#pragma once

// Closed-form evolution of the single-excitation amplitudes.
//
// The symmetric and antisymmetric channel sums S+- = sum_j (C_j^A +- C_j^B)
// obey s^2 + (kappa - i delta) s + gamma0 kappa (1 +- theta) = 0 in Laplace
// space, so each evolves as S(t) = G+-(t) S(0) with
//
//   G(t) = e^{-a t/2} [cosh(d t/2) + (a/d) sinh(d t/2)],   a = kappa - i delta,
//   d^2  = a^2 - 4 gamma0 kappa (1 +- theta).
//
// The per-atom differences C_1 - C_2 are conserved, which gives the mixing
// coefficients G1 = (G+ + G- + 2)/4, G2 = (G+ + G- - 2)/4, G3 = (G+ - G-)/4.

#include <cmath>
#include <complex>

#include "vtype/types.hpp"

namespace vtype {

enum class Branch { plus, minus };

/// Mixing coefficients at one time. g1 - g2 == 1 identically.
struct PropagatorCoefficients {
  complex g1{1.0};
  complex g2{};
  complex g3{};
};

inline complex damping_rate(const SystemParams& params) { return {params.kappa, -params.delta}; }

/// Principal square root of (kappa - i delta)^2 - 4 gamma0 kappa (1 +- theta).
inline complex collective_root(const SystemParams& params, Branch branch) {
  const complex a = damping_rate(params);
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  return std::sqrt(a * a - 4.0 * params.gamma0 * params.kappa * (1.0 + sign * params.theta));
}

namespace detail {

// sinh(x)/x, finite at x = 0.
inline complex sinhc(complex x) {
  if (std::abs(x) < 1e-3) {
    const complex x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

}  // namespace detail

/// G(t) for decay rate a and root d. Even in d.
///
/// Small |d t/2| uses the cosh/sinhc form (no 0/0 at d -> 0). Otherwise the
/// two characteristic exponentials are summed directly, since the cosh form
/// overflows against the e^{-a t/2} prefactor at long times.
inline complex propagator_from_root(complex a, complex d, double t) {
  const complex x = 0.5 * d * t;
  if (std::abs(x) <= 1.0) {
    return std::exp(-0.5 * a * t) * (std::cosh(x) + 0.5 * a * t * detail::sinhc(x));
  }
  if (d.real() < 0.0) d = -d;
  const complex slow = 0.5 * (d - a);
  const complex fast = -0.5 * (d + a);
  return (d + a) / (2.0 * d) * std::exp(slow * t) + (d - a) / (2.0 * d) * std::exp(fast * t);
}

inline complex propagator(const SystemParams& params, Branch branch, double t) {
  require_time(t);
  return propagator_from_root(damping_rate(params), collective_root(params, branch), t);
}

inline PropagatorCoefficients mixing_coefficients(complex g_plus, complex g_minus) {
  return {.g1 = (g_plus + g_minus + 2.0) / 4.0,
          .g2 = (g_plus + g_minus - 2.0) / 4.0,
          .g3 = (g_plus - g_minus) / 4.0};
}

inline PropagatorCoefficients mixing_coefficients(const SystemParams& params, double t) {
  return mixing_coefficients(propagator(params, Branch::plus, t), propagator(params, Branch::minus, t));
}

inline AmplitudeSet evolve_amplitudes(const AmplitudeSet& init, const PropagatorCoefficients& g) {
  const complex sum_a = init.c1a + init.c2a;
  const complex sum_b = init.c1b + init.c2b;
  return {.c1a = g.g1 * init.c1a + g.g2 * init.c2a + g.g3 * sum_b,
          .c1b = g.g1 * init.c1b + g.g2 * init.c2b + g.g3 * sum_a,
          .c2a = g.g1 * init.c2a + g.g2 * init.c1a + g.g3 * sum_b,
          .c2b = g.g1 * init.c2b + g.g2 * init.c1b + g.g3 * sum_a};
}

inline AmplitudeSet evolve_amplitudes(const AmplitudeSet& init, const SystemParams& params, double t) {
  params.validate();
  return evolve_amplitudes(init, mixing_coefficients(params, t));
}

}  // namespace vtype
