#pragma once

// Run configuration read from flat "key = value" text. Blank lines and
// lines starting with '#' are ignored. Every key is optional.
//
//   a, b, l1, branch            geometry (branch: dS | AdS)
//   tolerance.<suite>           multiplier on the suite's pinned tolerances
//   grid.lo, grid.hi, grid.nodes   mode grid in x = atanh(t), nodes >= 17
//   sweep.points, sweep.elements   random points / group elements per check
//   seed                        unsigned integer
//   format                      json | csv
//   modes.m2, modes.xi, modes.kk   mode parameters for exports
//   amplitude.de_max, amplitude.de_nodes, amplitude.kk   amplitude table (kk comma separated)

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tpd/core/errors.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"geometry", "dynamics", "group", "lie", "modes"};
  return names;
}

struct RunConfig {
  GeometryConfig geometry{};
  std::map<std::string, double> tolerance{{"geometry", 1.0}, {"dynamics", 1.0}, {"group", 1.0}, {"lie", 1.0},
                                          {"modes", 1.0}};
  double grid_lo = -5.0;
  double grid_hi = 5.0;
  std::size_t grid_nodes = 1001;
  std::size_t sweep_points = 1000;
  std::size_t sweep_elements = 100;
  std::uint64_t seed = 1;
  std::string format = "json";
  double mode_m2 = 0.0;
  double mode_xi = 0.0;
  double mode_kk = 2.0;
  double amplitude_de_max = 10.0;
  std::size_t amplitude_de_nodes = 41;
  std::vector<double> amplitude_kk{1.5, 2.0, 5.0, 10.0};

  double tolerance_scale(const std::string& suite) const {
    auto it = tolerance.find(suite);
    return it == tolerance.end() ? 1.0 : it->second;
  }

  void validate() const {
    try {
      geometry.validate();
    } catch (const InvalidInput& e) {
      throw UsageError("geometry", e.what());
    }
    for (const auto& [suite, t] : tolerance)
      if (!(t > 0.0)) throw UsageError("tolerance." + suite, "must be > 0");
    if (!(grid_hi > grid_lo)) throw UsageError("grid.hi", "must exceed grid.lo");
    if (grid_nodes < 17) throw UsageError("grid.nodes", "must be >= 17");
    if (sweep_points < 1) throw UsageError("sweep.points", "must be >= 1");
    if (sweep_elements < 1) throw UsageError("sweep.elements", "must be >= 1");
    if (format != "json" && format != "csv") throw UsageError("format", "must be json or csv");
    if (!(mode_m2 >= 0.0)) throw UsageError("modes.m2", "must be >= 0");
    if (!(amplitude_de_max >= 0.0)) throw UsageError("amplitude.de_max", "must be >= 0");
    for (double k : amplitude_kk)
      if (!(k > 1.0)) throw UsageError("amplitude.kk", "every k.k must exceed 1");
  }

  /// Canonical key/value listing, sorted by key.
  std::map<std::string, std::string> to_map() const;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) throw UsageError(key, "expected a number, got '" + v + "'");
  return out;
}

inline std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw UsageError(key, "expected a non-negative integer, got '" + v + "'");
  return out;
}

inline std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  return out;
}

inline std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Applies one key; throws UsageError naming the key.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  using namespace detail;
  if (key == "a") cfg.geometry.a = parse_double(key, value);
  else if (key == "b") cfg.geometry.b = parse_double(key, value);
  else if (key == "l1") cfg.geometry.l1 = parse_double(key, value);
  else if (key == "branch") {
    try {
      cfg.geometry.branch = parse_branch(value);
    } catch (const InvalidInput&) {
      throw UsageError(key, "expected dS or AdS, got '" + value + "'");
    }
  } else if (key.rfind("tolerance.", 0) == 0) {
    const std::string suite = key.substr(10);
    if (!cfg.tolerance.count(suite)) throw UsageError(key, "unknown suite '" + suite + "'");
    cfg.tolerance[suite] = parse_double(key, value);
  } else if (key == "grid.lo") cfg.grid_lo = parse_double(key, value);
  else if (key == "grid.hi") cfg.grid_hi = parse_double(key, value);
  else if (key == "grid.nodes") cfg.grid_nodes = parse_unsigned(key, value);
  else if (key == "sweep.points") cfg.sweep_points = parse_unsigned(key, value);
  else if (key == "sweep.elements") cfg.sweep_elements = parse_unsigned(key, value);
  else if (key == "seed") cfg.seed = parse_unsigned(key, value);
  else if (key == "format") cfg.format = value;
  else if (key == "modes.m2") cfg.mode_m2 = parse_double(key, value);
  else if (key == "modes.xi") cfg.mode_xi = parse_double(key, value);
  else if (key == "modes.kk") cfg.mode_kk = parse_double(key, value);
  else if (key == "amplitude.de_max") cfg.amplitude_de_max = parse_double(key, value);
  else if (key == "amplitude.de_nodes") cfg.amplitude_de_nodes = parse_unsigned(key, value);
  else if (key == "amplitude.kk") cfg.amplitude_kk = parse_list(key, value);
  else throw UsageError(key, "unknown key");
}

inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError("line " + std::to_string(lineno), "expected key = value");
    const std::string key = detail::trim(t.substr(0, eq));
    if (key.empty()) throw UsageError("line " + std::to_string(lineno), "empty key");
    apply_setting(cfg, key, detail::trim(t.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

inline RunConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config", "cannot read '" + path + "'");
  return parse_config(in);
}

inline std::map<std::string, std::string> RunConfig::to_map() const {
  using detail::format_double;
  std::map<std::string, std::string> m;
  m["a"] = format_double(geometry.a);
  m["b"] = format_double(geometry.b);
  m["l1"] = format_double(geometry.l1);
  m["branch"] = to_string(geometry.branch);
  for (const auto& [suite, t] : tolerance) m["tolerance." + suite] = format_double(t);
  m["grid.lo"] = format_double(grid_lo);
  m["grid.hi"] = format_double(grid_hi);
  m["grid.nodes"] = std::to_string(grid_nodes);
  m["sweep.points"] = std::to_string(sweep_points);
  m["sweep.elements"] = std::to_string(sweep_elements);
  m["seed"] = std::to_string(seed);
  m["format"] = format;
  m["modes.m2"] = format_double(mode_m2);
  m["modes.xi"] = format_double(mode_xi);
  m["modes.kk"] = format_double(mode_kk);
  m["amplitude.de_max"] = format_double(amplitude_de_max);
  m["amplitude.de_nodes"] = std::to_string(amplitude_de_nodes);
  std::string kk;
  for (double k : amplitude_kk) kk += (kk.empty() ? "" : ",") + format_double(k);
  m["amplitude.kk"] = kk;
  return m;
}

/// The canonical text form; parse_config_string(to_text(c)) reproduces c.
inline std::string to_text(const RunConfig& cfg) {
  std::string out;
  for (const auto& [k, v] : cfg.to_map()) out += k + " = " + v + "\n";
  return out;
}

}  // namespace tpd
