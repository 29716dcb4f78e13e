#pragma once

// Scenario configuration: flat key=value documents and the figure presets.
//
//   # comment
//   kappa=0.1
//   theta=1
//   initial=bell            # bell | product | custom
//   t_max=10
//   sweep1_key=p
//   sweep1_values=0,0.2,0.5,0.9
//
// Defaults: gamma0=1, delta=0, p=0, p_r=0, theta=1, steps=1000, initial=bell.
// kappa and t_max are required. Setting any of c2a_re, c2a_im, c1b_re,
// c1b_im selects a custom initial state (|c2a|^2 + |c1b|^2 <= 1).

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "vtype/measurement.hpp"
#include "vtype/types.hpp"

namespace vtype {

enum class SweepKey { p, p_r, theta, delta, kappa };

inline std::string_view to_string(SweepKey key) {
  switch (key) {
    case SweepKey::p: return "p";
    case SweepKey::p_r: return "p_r";
    case SweepKey::theta: return "theta";
    case SweepKey::delta: return "delta";
    case SweepKey::kappa: return "kappa";
  }
  return "?";
}

struct SweepAxis {
  SweepKey key = SweepKey::p;
  std::vector<double> values;
};

enum class InitialKind { bell, product, custom };

struct InitialState {
  InitialKind kind = InitialKind::bell;
  complex c2a{};
  complex c1b{};

  [[nodiscard]] AmplitudeSet amplitudes() const {
    switch (kind) {
      case InitialKind::bell: return bell_state();
      case InitialKind::product: return product_state();
      case InitialKind::custom: break;
    }
    return {.c1a = 0.0, .c1b = c1b, .c2a = c2a, .c2b = 0.0};
  }
};

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { unknown_key, type, range, missing, duplicate };

  ConfigError(Kind kind, std::string field, const std::string& detail)
      : std::runtime_error(field + ": " + detail), kind_(kind), field_(std::move(field)) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

struct ScenarioConfig {
  std::string name = "custom";
  SystemParams params{.gamma0 = 1.0, .kappa = 1.0, .theta = 1.0, .delta = 0.0};
  MeasurementStrengths strengths;
  InitialState initial;
  double t_max = 0.0;
  int steps = 1000;
  std::vector<SweepAxis> sweeps;
  std::optional<double> eval_time;
  bool oracle_check = false;
  WeakNormalization normalization = WeakNormalization::unnormalized;

  /// Grid mode evaluates every sweep cell at one time instead of a time series.
  [[nodiscard]] bool is_grid() const { return eval_time.has_value() || sweeps.size() == 2; }
  [[nodiscard]] double grid_time() const { return eval_time.value_or(t_max); }

  void validate() const;
};

/// Copy of (params, strengths) with one sweep value substituted.
struct Cell {
  SystemParams params;
  MeasurementStrengths strengths;
};

inline Cell apply_sweep(Cell cell, SweepKey key, double value) {
  switch (key) {
    case SweepKey::p: cell.strengths.p = value; break;
    case SweepKey::p_r: cell.strengths.p_r = value; break;
    case SweepKey::theta: cell.params.theta = value; break;
    case SweepKey::delta: cell.params.delta = value; break;
    case SweepKey::kappa: cell.params.kappa = value; break;
  }
  return cell;
}

namespace detail {

inline void check_cell(const Cell& c, std::string_view field) {
  using K = ConfigError::Kind;
  const std::string f(field);
  auto num = [](double v) { return std::to_string(v); };
  if (!(std::isfinite(c.params.gamma0) && c.params.gamma0 > 0.0))
    throw ConfigError(K::range, f, "gamma0 = " + num(c.params.gamma0) + " must be > 0");
  if (!(std::isfinite(c.params.kappa) && c.params.kappa > 0.0))
    throw ConfigError(K::range, f, "kappa = " + num(c.params.kappa) + " must be > 0");
  if (!(std::isfinite(c.params.theta) && std::abs(c.params.theta) <= 1.0))
    throw ConfigError(K::range, f, "theta = " + num(c.params.theta) + " violates |theta| <= 1");
  if (!std::isfinite(c.params.delta)) throw ConfigError(K::range, f, "delta must be finite");
  if (!(c.strengths.p >= 0.0 && c.strengths.p <= 1.0))
    throw ConfigError(K::range, f, "p = " + num(c.strengths.p) + " violates 0 <= p <= 1");
  if (!(c.strengths.p_r >= 0.0 && c.strengths.p_r < 1.0))
    throw ConfigError(K::range, f, "p_r = " + num(c.strengths.p_r) + " violates 0 <= p_r < 1");
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw ConfigError(ConfigError::Kind::type, std::string(key),
                      "expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

inline int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(ConfigError::Kind::type, std::string(key),
                      "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_double(key, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

inline SweepKey parse_sweep_key(std::string_view field, std::string_view text) {
  text = trim(text);
  for (SweepKey k : {SweepKey::p, SweepKey::p_r, SweepKey::theta, SweepKey::delta, SweepKey::kappa}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError(ConfigError::Kind::type, std::string(field),
                    "unknown sweep axis '" + std::string(text) + "' (expected p, p_r, theta, delta or kappa)");
}

}  // namespace detail

inline void ScenarioConfig::validate() const {
  using K = ConfigError::Kind;
  detail::check_cell({params, strengths}, "parameters");
  if (!(std::isfinite(t_max) && t_max > 0.0)) throw ConfigError(K::range, "t_max", "must be > 0");
  if (steps < 2) throw ConfigError(K::range, "steps", "must be >= 2, got " + std::to_string(steps));
  if (eval_time && !(std::isfinite(*eval_time) && *eval_time >= 0.0))
    throw ConfigError(K::range, "eval_time", "must be >= 0");
  if (sweeps.size() > 2) throw ConfigError(K::range, "sweeps", "at most two sweep axes");
  if (sweeps.size() == 2 && sweeps[0].key == sweeps[1].key)
    throw ConfigError(K::duplicate, "sweep2_key", "repeats sweep1_key");
  if (is_grid() && sweeps.empty()) throw ConfigError(K::missing, "sweep1_key", "grid mode needs a sweep axis");
  for (std::size_t a = 0; a < sweeps.size(); ++a) {
    const std::string field = "sweep" + std::to_string(a + 1) + "_values";
    if (sweeps[a].values.empty()) throw ConfigError(K::missing, field, "empty value list");
    for (double v : sweeps[a].values) detail::check_cell(apply_sweep({params, strengths}, sweeps[a].key, v), field);
  }
  if (initial.kind == InitialKind::custom) {
    const double norm = std::norm(initial.c2a) + std::norm(initial.c1b);
    if (!(norm <= 1.0 + kNormTolerance))
      throw ConfigError(K::range, "initial", "|c2a|^2 + |c1b|^2 = " + std::to_string(norm) + " exceeds 1");
  }
}

inline ScenarioConfig parse_scenario(std::string_view text) {
  using K = ConfigError::Kind;
  std::map<std::string, std::string, std::less<>> kv;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(K::type, std::string(line), "expected key=value");
    const std::string key(detail::trim(line.substr(0, eq)));
    if (kv.contains(key)) throw ConfigError(K::duplicate, key, "key given twice");
    kv.emplace(key, std::string(detail::trim(line.substr(eq + 1))));
  }

  static const std::set<std::string, std::less<>> known = {
      "gamma0", "kappa",   "theta",   "delta",      "p",             "p_r",
      "initial", "c2a_re", "c2a_im",  "c1b_re",     "c1b_im",        "t_max",
      "steps",  "sweep1_key", "sweep1_values", "sweep2_key", "sweep2_values", "eval_time"};
  for (const auto& [key, _] : kv) {
    if (!known.contains(key)) throw ConfigError(K::unknown_key, key, "unknown key");
  }

  auto number = [&](std::string_view key) -> std::optional<double> {
    if (auto it = kv.find(key); it != kv.end()) return detail::parse_double(key, it->second);
    return std::nullopt;
  };

  ScenarioConfig cfg;
  if (auto v = number("gamma0")) cfg.params.gamma0 = *v;
  if (auto v = number("kappa")) cfg.params.kappa = *v;
  else throw ConfigError(K::missing, "kappa", "required key");
  if (auto v = number("theta")) cfg.params.theta = *v;
  if (auto v = number("delta")) cfg.params.delta = *v;
  if (auto v = number("p")) cfg.strengths.p = *v;
  if (auto v = number("p_r")) cfg.strengths.p_r = *v;
  if (auto v = number("t_max")) cfg.t_max = *v;
  else throw ConfigError(K::missing, "t_max", "required key");
  if (auto it = kv.find("steps"); it != kv.end()) cfg.steps = detail::parse_int("steps", it->second);
  if (auto v = number("eval_time")) cfg.eval_time = *v;

  const bool explicit_amps = kv.contains("c2a_re") || kv.contains("c2a_im") || kv.contains("c1b_re") ||
                             kv.contains("c1b_im");
  if (auto it = kv.find("initial"); it != kv.end()) {
    if (it->second == "bell") cfg.initial.kind = InitialKind::bell;
    else if (it->second == "product") cfg.initial.kind = InitialKind::product;
    else if (it->second == "custom") cfg.initial.kind = InitialKind::custom;
    else throw ConfigError(K::type, "initial", "expected bell, product or custom, got '" + it->second + "'");
    if (explicit_amps && cfg.initial.kind != InitialKind::custom)
      throw ConfigError(K::type, "initial", "explicit amplitudes require initial=custom");
  } else if (explicit_amps) {
    cfg.initial.kind = InitialKind::custom;
  }
  if (cfg.initial.kind == InitialKind::custom) {
    cfg.initial.c2a = {number("c2a_re").value_or(0.0), number("c2a_im").value_or(0.0)};
    cfg.initial.c1b = {number("c1b_re").value_or(0.0), number("c1b_im").value_or(0.0)};
  }

  for (int a = 1; a <= 2; ++a) {
    const std::string key_field = "sweep" + std::to_string(a) + "_key";
    const std::string values_field = "sweep" + std::to_string(a) + "_values";
    const auto key_it = kv.find(key_field);
    const auto values_it = kv.find(values_field);
    if (key_it == kv.end() && values_it == kv.end()) continue;
    if (key_it == kv.end()) throw ConfigError(K::missing, key_field, "required with " + values_field);
    if (values_it == kv.end()) throw ConfigError(K::missing, values_field, "required with " + key_field);
    if (a == 2 && cfg.sweeps.empty()) throw ConfigError(K::missing, "sweep1_key", "sweep2 requires sweep1");
    cfg.sweeps.push_back({detail::parse_sweep_key(key_field, key_it->second),
                          detail::parse_list(values_field, values_it->second)});
  }

  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// Figure presets

namespace detail {

inline std::string linspace_list(double lo, double hi, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    char buf[32];
    const double v = lo + (hi - lo) * i / (n - 1);
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
  }
  return out;
}

inline std::string join(std::initializer_list<std::string_view> lines) {
  std::string out;
  for (auto l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> preset_names() {
  std::vector<std::string> names = {"fig2a", "fig2b"};
  for (int fig = 3; fig <= 8; ++fig) {
    for (char panel : {'a', 'b', 'c', 'd'}) names.push_back("fig" + std::to_string(fig) + panel);
  }
  return names;
}

/// Config documents for a preset. Most presets are one document; fig2a and
/// fig2b hold one per initial state.
inline std::vector<std::string> preset_texts(std::string_view name) {
  if (name == "fig2a" || name == "fig2b") {
    const std::string sweep = name == "fig2a" ? "sweep1_key=p\nsweep1_values=" + detail::linspace_list(0.0, 1.0, 51)
                                              : "sweep1_key=p_r\nsweep1_values=" + detail::linspace_list(0.0, 0.98, 51);
    std::vector<std::string> out;
    for (std::string_view initial : {"bell", "product"}) {
      out.push_back(detail::join({"gamma0=1", "kappa=0.1", "theta=1", "delta=0", "p=0", "p_r=0", "t_max=10",
                                  "eval_time=10"}) +
                    "initial=" + std::string(initial) + "\n" + sweep + "\n");
    }
    return out;
  }

  if (name.size() != 5 || name.substr(0, 3) != "fig" || name[3] < '3' || name[3] > '8' || name[4] < 'a' ||
      name[4] > 'd') {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  const int fig = name[3] - '0';
  const char panel = name[4];
  const bool weak_coupling = panel == 'a' || panel == 'b';
  const bool reversal = panel == 'b' || panel == 'd';

  std::string text = "gamma0=1\n";
  text += weak_coupling ? "kappa=10\nt_max=20\n" : "kappa=0.1\nt_max=200\n";
  text += "steps=1000\n";
  const std::string initial = fig % 2 == 1 ? "bell" : "product";
  text += "initial=" + initial + "\n";

  switch (fig) {
    case 3:
    case 4:
      text += "p=0\ndelta=0\nsweep1_key=theta\nsweep1_values=0,0.3,0.7,1\n";
      text += reversal ? "p_r=0.9\n" : "p_r=0\n";
      break;
    case 5:
    case 6:
      text += fig == 5 ? "theta=1\n" : "theta=0.7\n";
      text += "delta=0\n";
      text += reversal ? "p=0\nsweep1_key=p_r\n" : "p_r=0\nsweep1_key=p\n";
      text += "sweep1_values=0,0.2,0.5,0.9\n";
      break;
    default:  // 7, 8
      text += "p=0\ntheta=0\nsweep1_key=delta\nsweep1_values=0,5,10\n";
      text += reversal ? "p_r=0.9\n" : "p_r=0\n";
      break;
  }
  return {text};
}

inline std::vector<ScenarioConfig> preset(std::string_view name) {
  std::vector<ScenarioConfig> out;
  for (const auto& text : preset_texts(name)) {
    out.push_back(parse_scenario(text));
    out.back().name = std::string(name);
  }
  return out;
}

}  // namespace vtype
