#pragma once

// Brute-force reference for the closed form.
//
// The amplitude equation dC_l^m/dt = -sum_n int_0^t f_mn(t - t') sum_j C_j^n(t') dt'
// has the exponential kernel f_mn = (gamma0 kappa / 2) theta_mn e^{-(kappa - i delta)(t - t')}
// with theta_mm = 1 and theta_AB = theta. Introducing the memory variables
//   u_n(t) = int_0^t e^{-(kappa - i delta)(t - t')} sum_j C_j^n(t') dt'
// turns it into the local system
//   du_n/dt    = -(kappa - i delta) u_n + sum_j C_j^n
//   dC_l^A/dt  = -(gamma0 kappa / 2)(u_A + theta u_B)
//   dC_l^B/dt  = -(gamma0 kappa / 2)(u_B + theta u_A)
// which is integrated with fixed-step RK4. The reduction is exact, so the only
// error is the O(dt^4) stepping error.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtype/analytic_dynamics.hpp"
#include "vtype/types.hpp"

namespace vtype::oracle {

enum class Channel { same, cross };

/// f(tau) for the same decay channel, f'(tau) across channels.
inline complex memory_kernel(const SystemParams& params, Channel channel, double tau) {
  require_time(tau);
  const double strength = channel == Channel::same ? 1.0 : params.theta;
  return 0.5 * params.gamma0 * params.kappa * strength * std::exp(-damping_rate(params) * tau);
}

struct AugmentedState {
  AmplitudeSet amps;
  complex u_a{};
  complex u_b{};
};

/// Largest step accepted by integrate().
inline double max_step(const SystemParams& params) {
  return 0.01 / std::max({params.kappa, params.gamma0, std::abs(params.delta), 1.0});
}

namespace detail {

inline AugmentedState derivative(const AugmentedState& s, const SystemParams& params) {
  const complex a = damping_rate(params);
  const double rate = 0.5 * params.gamma0 * params.kappa;
  const complex da = -rate * (s.u_a + params.theta * s.u_b);
  const complex db = -rate * (s.u_b + params.theta * s.u_a);
  return {.amps = {.c1a = da, .c1b = db, .c2a = da, .c2b = db},
          .u_a = -a * s.u_a + s.amps.c1a + s.amps.c2a,
          .u_b = -a * s.u_b + s.amps.c1b + s.amps.c2b};
}

inline AugmentedState axpy(const AugmentedState& x, double h, const AugmentedState& k) {
  return {.amps = x.amps + complex(h) * k.amps, .u_a = x.u_a + h * k.u_a, .u_b = x.u_b + h * k.u_b};
}

inline bool finite(const AugmentedState& s) {
  auto ok = [](complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(s.amps.c1a) && ok(s.amps.c1b) && ok(s.amps.c2a) && ok(s.amps.c2b) && ok(s.u_a) && ok(s.u_b);
}

inline AugmentedState rk4_step(const AugmentedState& s, const SystemParams& params, double h) {
  const AugmentedState k1 = derivative(s, params);
  const AugmentedState k2 = derivative(axpy(s, 0.5 * h, k1), params);
  const AugmentedState k3 = derivative(axpy(s, 0.5 * h, k2), params);
  const AugmentedState k4 = derivative(axpy(s, h, k3), params);
  AugmentedState out = axpy(s, h / 6.0, k1);
  out = axpy(out, h / 3.0, k2);
  out = axpy(out, h / 3.0, k3);
  out = axpy(out, h / 6.0, k4);
  if (!finite(out)) throw std::runtime_error("oracle integration produced a non-finite value");
  return out;
}

inline void check_step(const SystemParams& params, double dt) {
  params.validate();
  const double bound = max_step(params);
  if (!(dt > 0.0 && dt <= bound * (1.0 + 1e-12))) {
    throw std::invalid_argument("oracle step dt = " + std::to_string(dt) + " violates 0 < dt <= " +
                                std::to_string(bound));
  }
}

// Uniform step count covering `duration` with steps no longer than dt.
inline long step_count(double duration, double dt) {
  return static_cast<long>(std::ceil(duration / dt - 1e-9));
}

}  // namespace detail

/// Advance by `duration` using uniform steps no longer than dt.
inline AugmentedState advance(AugmentedState state, const SystemParams& params, double duration, double dt) {
  detail::check_step(params, dt);
  require_time(duration);
  const long n = detail::step_count(duration, dt);
  if (n == 0) return state;
  const double h = duration / static_cast<double>(n);
  for (long i = 0; i < n; ++i) state = detail::rk4_step(state, params, h);
  return state;
}

/// Uniformly sampled oracle trajectory; samples[i] is the state at i * step.
struct Trajectory {
  double step = 0.0;
  std::vector<AmplitudeSet> samples;

  [[nodiscard]] double time(std::size_t i) const { return step * static_cast<double>(i); }
};

inline Trajectory integrate(const AmplitudeSet& init, const SystemParams& params, double t_end, double dt) {
  detail::check_step(params, dt);
  require_time(t_end);
  Trajectory traj;
  const long n = detail::step_count(t_end, dt);
  traj.step = n > 0 ? t_end / static_cast<double>(n) : dt;
  traj.samples.reserve(static_cast<std::size_t>(n) + 1);
  AugmentedState state{.amps = init};
  traj.samples.push_back(init);
  for (long i = 0; i < n; ++i) {
    state = detail::rk4_step(state, params, traj.step);
    traj.samples.push_back(state.amps);
  }
  return traj;
}

struct DeviationReport {
  SystemParams params;
  AmplitudeSet init;
  /// max |analytic - oracle| per amplitude, in c1a, c1b, c2a, c2b order.
  std::array<double, 4> max_abs{};

  [[nodiscard]] double worst() const { return *std::max_element(max_abs.begin(), max_abs.end()); }
};

/// Compare a closed-form route against the oracle at every time in t_grid
/// (ascending). `analytic(init, params, t)` defaults to evolve_amplitudes.
template <typename Analytic>
DeviationReport compare(const SystemParams& params, const AmplitudeSet& init, std::span<const double> t_grid,
                        double dt, Analytic&& analytic) {
  detail::check_step(params, dt);
  DeviationReport report{.params = params, .init = init};
  AugmentedState state{.amps = init};
  double now = 0.0;
  for (double t : t_grid) {
    require_time(t);
    if (t < now) throw std::invalid_argument("compare: t_grid must be ascending");
    state = advance(state, params, t - now, dt);
    now = t;
    const auto expected = state.amps.as_array();
    const auto actual = analytic(init, params, t).as_array();
    for (std::size_t k = 0; k < 4; ++k) {
      report.max_abs[k] = std::max(report.max_abs[k], std::abs(actual[k] - expected[k]));
    }
  }
  return report;
}

inline DeviationReport compare(const SystemParams& params, const AmplitudeSet& init, std::span<const double> t_grid,
                               double dt) {
  return compare(params, init, t_grid, dt, [](const AmplitudeSet& a, const SystemParams& p, double t) {
    return evolve_amplitudes(a, p, t);
  });
}

}  // namespace vtype::oracle
