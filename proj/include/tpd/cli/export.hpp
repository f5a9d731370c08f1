#pragma once

// Plot-ready CSV exports. Numbers are written in shortest round-trip form,
// so equal configurations give byte-identical files.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tpd/cli/config.hpp"
#include "tpd/dynamics/integrator.hpp"
#include "tpd/group/invariance.hpp"
#include "tpd/modes/unruh.hpp"
#include "tpd/modes/wkb.hpp"

namespace tpd {

inline const std::vector<std::string>& export_quantities() {
  static const std::vector<std::string> q{"amplitude", "trajectory", "mode", "w", "density"};
  return q;
}

namespace detail {

inline void csv_row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_double(v);
    first = false;
  }
  os << '\n';
}

}  // namespace detail

// Default state for trajectory exports, in units of l1.
inline KinState default_export_state(const GeometryConfig& g) {
  return {0.0, {0.1 * g.l1, 0.0, 0.0}, {0.2, 0.1, 0.0}};
}

inline ModeParams mode_params(const RunConfig& cfg) { return {cfg.mode_m2, cfg.mode_xi, cfg.mode_kk, 1, true}; }

/// dE on [0, de_max] with de_nodes nodes, for every configured k.k.
inline std::size_t write_amplitude_csv(std::ostream& os, const RunConfig& cfg) {
  os << "dE,kk,amplitude\n";
  std::vector<double> dE;
  const std::size_t n = cfg.amplitude_de_nodes;
  for (std::size_t i = 0; i < n; ++i)
    dE.push_back(n == 1 ? 0.0 : cfg.amplitude_de_max * static_cast<double>(i) / static_cast<double>(n - 1));
  const auto rows = amplitude_table(dE, cfg.amplitude_kk);
  for (const auto& r : rows) detail::csv_row(os, {r.dE, r.kk, r.amplitude});
  return rows.size();
}

inline std::size_t write_trajectory_export(std::ostream& os, const RunConfig& cfg) {
  const auto& g = cfg.geometry;
  const KinState s = default_export_state(g);
  const auto tr = integrate_free_motion(s, s.t + 0.5 * g.l1, 0.01 * g.l1, g);
  os << "t,x1,x2,x3,v1,v2,v3,straightness_error\n";
  for (std::size_t k = 0; k < tr.size(); ++k)
    detail::csv_row(os, {tr.t[k], tr.x[k][0], tr.x[k][1], tr.x[k][2], tr.v[k][0], tr.v[k][1], tr.v[k][2],
                         tr.straightness_error(k)});
  return tr.size();
}

/// The mode on the configured grid. The massless case uses the exact
/// solution; otherwise RK4 started from lowest-order WKB data.
inline ModeSolution export_mode_solution(const RunConfig& cfg) {
  const ModeParams p = mode_params(cfg);
  p.validate();
  if (p.mass_term() == 0.0) return exact_massless_solution(p, cfg.grid_lo, cfg.grid_hi, cfg.grid_nodes);
  const auto w = wkb_solution(wkb_initial(p, cfg.grid_lo, cfg.grid_hi, cfg.grid_nodes), p);
  // integrate with 8 substeps per grid cell, then keep the grid nodes
  const std::size_t sub = 8;
  const double h = (cfg.grid_hi - cfg.grid_lo) / static_cast<double>((cfg.grid_nodes - 1) * sub);
  const auto fine = solve_mode_ode(p, w.chi.front(), w.dchi.front(), cfg.grid_lo, cfg.grid_hi, h);
  ModeSolution s;
  s.method = ModeMethod::ode;
  for (std::size_t i = 0; i < fine.size(); i += sub) {
    s.x.push_back(fine.x[i]);
    s.chi.push_back(fine.chi[i]);
    s.dchi.push_back(fine.dchi[i]);
  }
  s.max_residual = mode_residual(s, p);
  return s;
}

inline std::size_t write_mode_csv(std::ostream& os, const RunConfig& cfg) {
  const ModeParams p = mode_params(cfg);
  const auto s = export_mode_solution(cfg);
  os << "x,re_chi,im_chi,abs_chi,w\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    detail::csv_row(os, {s.x[i], s.chi[i].real(), s.chi[i].imag(), std::abs(s.chi[i]), wkb_w0(p, s.x[i])});
  return s.size();
}

/// w at orders 0, 1, 2 on the order-2 grid.
inline std::size_t write_w_csv(std::ostream& os, const RunConfig& cfg) {
  const ModeParams p = mode_params(cfg);
  const auto s0 = wkb_initial(p, cfg.grid_lo, cfg.grid_hi, cfg.grid_nodes);
  const auto s1 = wkb_iterate(s0, p);
  const auto s2 = wkb_iterate(s1, p);
  os << "x,w0,w1,w2\n";
  for (std::size_t i = 0; i < s2.size(); ++i) detail::csv_row(os, {s2.x(i), s0.w[i + 4], s1.w[i + 2], s2.w[i]});
  return s2.size();
}

/// Yang-Mills and Born-Infeld densities of the induced D on the (t, x1) plane.
inline std::size_t write_density_csv(std::ostream& os, const RunConfig&) {
  const FormParams p{1.0, 0.5, -0.3};
  const auto D = displayed_D(p);
  const int side = 41;
  os << "t,x1,yang_mills,born_infeld\n";
  std::size_t rows = 0;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      const Point4 x{-0.6 + 1.2 * i / (side - 1), -0.6 + 1.2 * j / (side - 1), 0.0, 0.0};
      detail::csv_row(os, {x[0], x[1], density_of(DensityKind::yang_mills, D, x),
                           density_of(DensityKind::born_infeld, D, x)});
      ++rows;
    }
  return rows;
}

inline std::size_t write_export(std::ostream& os, const RunConfig& cfg, const std::string& quantity) {
  cfg.validate();
  if (quantity == "amplitude") return write_amplitude_csv(os, cfg);
  if (quantity == "trajectory") return write_trajectory_export(os, cfg);
  if (quantity == "mode") return write_mode_csv(os, cfg);
  if (quantity == "w") return write_w_csv(os, cfg);
  if (quantity == "density") return write_density_csv(os, cfg);
  throw UsageError("quantity", "unknown quantity '" + quantity + "'");
}

/// Writes the CSV to path. Nothing is written if the computation fails.
inline std::size_t export_grid(const RunConfig& cfg, const std::string& quantity, const std::string& path) {
  std::ostringstream buf;
  const std::size_t rows = write_export(buf, cfg, quantity);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("out", "cannot write '" + path + "'");
  out << buf.str();
  out.close();
  if (!out) throw UsageError("out", "write to '" + path + "' failed");
  return rows;
}

}  // namespace tpd
