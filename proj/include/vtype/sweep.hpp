#pragma once

// Pipeline composition (weak measurement -> evolve -> density -> reversal ->
// negativity) over time series and parameter grids, and CSV output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtype/analytic_dynamics.hpp"
#include "vtype/entanglement.hpp"
#include "vtype/measurement.hpp"
#include "vtype/oracle.hpp"
#include "vtype/scenario.hpp"

namespace vtype {

struct Row {
  int curve_id = 0;
  double kappa = 0.0;
  double theta = 0.0;
  double delta = 0.0;
  double p = 0.0;
  double p_r = 0.0;
  double t = 0.0;
  double negativity = 0.0;
  double success_prob = 0.0;
  double rho11 = 0.0;
  double rho33 = 0.0;
  double rho44 = 0.0;
  double rho77 = 0.0;
  double coherence34_abs = 0.0;
};

using Table = std::vector<Row>;

inline constexpr const char* kCsvHeader =
    "curve_id,kappa,theta,delta,p,p_r,t,negativity,success_prob,rho11,rho33,rho44,rho77,coherence34_abs";

/// Everything the pipeline produces at one (cell, t).
struct PipelineState {
  AmplitudeSet amplitudes;
  DensityMatrix9 before_reversal;
  DensityMatrix9 after_reversal;
  double negativity = 0.0;
  double success_prob = 0.0;
};

inline PipelineState run_pipeline(const AmplitudeSet& init, const Cell& cell, double t,
                                  WeakNormalization mode = WeakNormalization::unnormalized) {
  const AmplitudeSet measured = apply_weak_measurement(init, cell.strengths.p, mode);
  PipelineState s;
  s.amplitudes = evolve_amplitudes(measured, cell.params, t);
  s.before_reversal = assemble_density(s.amplitudes);
  s.after_reversal = apply_reversal(s.before_reversal, cell.strengths.p_r);
  s.negativity = negativity(s.after_reversal);
  s.success_prob = success_probability(s.amplitudes, cell.strengths.p_r);
  return s;
}

inline Row make_row(int curve_id, const Cell& cell, double t, const PipelineState& s) {
  const auto& r = s.after_reversal;
  return {.curve_id = curve_id,
          .kappa = cell.params.kappa,
          .theta = cell.params.theta,
          .delta = cell.params.delta,
          .p = cell.strengths.p,
          .p_r = cell.strengths.p_r,
          .t = t,
          .negativity = s.negativity,
          .success_prob = s.success_prob,
          .rho11 = r.population(basis_index(Level::C, Level::C)),
          .rho33 = r.population(basis_index(Level::C, Level::A)),
          .rho44 = r.population(basis_index(Level::B, Level::C)),
          .rho77 = r.population(basis_index(Level::A, Level::C)),
          .coherence34_abs = std::abs(r(basis_index(Level::C, Level::A), basis_index(Level::B, Level::C)))};
}

/// Uniform grid of `steps` points on [0, t_max].
inline std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[i] = i == steps - 1 ? t_max : t_max * i / (steps - 1);
  return out;
}

namespace detail {

inline Row evaluate(const ScenarioConfig& cfg, int curve_id, const Cell& cell, double t) {
  try {
    return make_row(curve_id, cell, t, run_pipeline(cfg.initial.amplitudes(), cell, t, cfg.normalization));
  } catch (const std::exception& e) {
    std::ostringstream msg;
    msg << "curve " << curve_id << ", t = " << t << ": " << e.what();
    throw std::runtime_error(msg.str());
  }
}

// Oracle spot check on nine cells spread evenly over the table.
inline void oracle_check(const ScenarioConfig& cfg, const Table& table) {
  if (table.empty()) return;
  const std::size_t samples = std::min<std::size_t>(9, table.size());
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t idx = samples == 1 ? 0 : k * (table.size() - 1) / (samples - 1);
    const Row& row = table[idx];
    const SystemParams params{.gamma0 = cfg.params.gamma0, .kappa = row.kappa, .theta = row.theta, .delta = row.delta};
    const AmplitudeSet init = apply_weak_measurement(cfg.initial.amplitudes(), row.p, cfg.normalization);
    const double dt = std::min(1e-3, oracle::max_step(params));
    const double grid[] = {row.t};
    const auto report = oracle::compare(params, init, grid, dt);
    if (!(report.worst() <= 1e-6)) {
      std::ostringstream msg;
      msg << "oracle check failed at curve " << row.curve_id << ", t = " << row.t << ": deviation "
          << report.worst() << " > 1e-6";
      throw std::runtime_error(msg.str());
    }
  }
}

template <typename Fn>
std::vector<Table> evaluate_curves(std::size_t n, Fn&& fn) {
  std::vector<std::future<Table>> futures;
  futures.reserve(n);
  for (std::size_t i = 0; i < n; ++i) futures.push_back(std::async(std::launch::async, fn, i));
  std::vector<Table> out;
  out.reserve(n);
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

inline Table concat(std::vector<Table> parts) {
  Table out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace detail

/// One curve per sweep1 value (or a single curve), one row per time point.
inline Table run_time_series(const ScenarioConfig& cfg, int first_curve_id = 0) {
  cfg.validate();
  if (cfg.sweeps.size() > 1) throw std::invalid_argument("time series takes at most one sweep axis");
  const std::vector<double> times = time_grid(cfg.t_max, cfg.steps);
  const Cell base{cfg.params, cfg.strengths};
  std::vector<Cell> curves;
  if (cfg.sweeps.empty()) {
    curves.push_back(base);
  } else {
    for (double v : cfg.sweeps[0].values) curves.push_back(apply_sweep(base, cfg.sweeps[0].key, v));
  }
  Table table = detail::concat(detail::evaluate_curves(curves.size(), [&](std::size_t c) {
    Table part;
    part.reserve(times.size());
    for (double t : times) part.push_back(detail::evaluate(cfg, first_curve_id + static_cast<int>(c), curves[c], t));
    return part;
  }));
  if (cfg.oracle_check) detail::oracle_check(cfg, table);
  return table;
}

/// Negativity at the grid time for every sweep cell. Curves run along
/// sweep2 (if present); rows within a curve follow sweep1 order.
inline Table run_grid(const ScenarioConfig& cfg, int first_curve_id = 0) {
  cfg.validate();
  if (cfg.sweeps.empty()) throw std::invalid_argument("grid needs one or two sweep axes");
  const double t = cfg.grid_time();
  const Cell base{cfg.params, cfg.strengths};
  std::vector<Cell> outer;
  if (cfg.sweeps.size() == 2) {
    for (double v : cfg.sweeps[1].values) outer.push_back(apply_sweep(base, cfg.sweeps[1].key, v));
  } else {
    outer.push_back(base);
  }
  Table table = detail::concat(detail::evaluate_curves(outer.size(), [&](std::size_t c) {
    Table part;
    for (double v : cfg.sweeps[0].values) {
      part.push_back(detail::evaluate(cfg, first_curve_id + static_cast<int>(c),
                                      apply_sweep(outer[c], cfg.sweeps[0].key, v), t));
    }
    return part;
  }));
  if (cfg.oracle_check) detail::oracle_check(cfg, table);
  return table;
}

inline Table run_scenario(const ScenarioConfig& cfg, int first_curve_id = 0) {
  return cfg.is_grid() ? run_grid(cfg, first_curve_id) : run_time_series(cfg, first_curve_id);
}

/// Runs several configs back to back with consecutive curve ids.
inline Table run_all(const std::vector<ScenarioConfig>& cfgs) {
  Table out;
  int next_curve = 0;
  for (const auto& cfg : cfgs) {
    Table part = run_scenario(cfg, next_curve);
    for (const auto& row : part) next_curve = std::max(next_curve, row.curve_id + 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace detail {

inline void put_number(std::ostream& os, double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", v);
  os.write(buf, n);
}

}  // namespace detail

inline void write_csv(const Table& table, std::ostream& os) {
  if (table.empty()) throw std::invalid_argument("refusing to write an empty table");
  os << kCsvHeader << '\n';
  for (const auto& r : table) {
    os << r.curve_id;
    for (double v : {r.kappa, r.theta, r.delta, r.p, r.p_r, r.t, r.negativity, r.success_prob, r.rho11, r.rho33,
                     r.rho44, r.rho77, r.coherence34_abs}) {
      os << ',';
      detail::put_number(os, v);
    }
    os << '\n';
  }
}

inline void emit_csv(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace vtype
