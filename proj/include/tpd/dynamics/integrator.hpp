#pragma once

// Classical RK4 on the explicit equations of motion dx/dt = v, dv/dt = H^-1 r.

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "tpd/dynamics/lagrangian.hpp"

namespace tpd {

struct Trajectory {
  std::vector<double> t;
  std::vector<Vec3> x;
  std::vector<Vec3> v;
  double step = 0.0;
  std::string method = "rk4";

  std::size_t size() const { return t.size(); }

  // |x(t) - x0 - v0 (t - t0)|_inf at sample k.
  double straightness_error(std::size_t k) const {
    double e = 0.0;
    for (int i = 0; i < 3; ++i)
      e = std::max(e, std::abs(x[k][i] - x[0][i] - v[0][i] * (t[k] - t[0])));
    return e;
  }
  double max_straightness_error() const {
    double e = 0.0;
    for (std::size_t k = 0; k < size(); ++k) e = std::max(e, straightness_error(k));
    return e;
  }
};

namespace detail {

struct Phase {
  Vec3 x, v;
};

inline Phase phase_rate(double t, const Phase& p, const GeometryConfig& cfg, const CoefficientModel& model) {
  const KinState s{t, p.x, p.v};
  require_chart(event_of(s), cfg, "integrate_free_motion");
  return {p.v, acceleration(s, cfg, model)};
}

inline Phase axpy(const Phase& p, double h, const Phase& k) {
  Phase r = p;
  for (int i = 0; i < 3; ++i) {
    r.x[i] += h * k.x[i];
    r.v[i] += h * k.v[i];
  }
  return r;
}

}  // namespace detail

/// Integrates from s0.t to t_end with steps no longer than `step`.
inline Trajectory integrate_free_motion(const KinState& s0, double t_end, double step, const GeometryConfig& cfg,
                                        const CoefficientModel& model = {}) {
  if (!(step > 0.0)) throw InvalidInput("integrate_free_motion: step must be positive");
  if (!(t_end > s0.t)) throw InvalidInput("integrate_free_motion: t_end must exceed the initial time");
  require_chart(event_of(s0), cfg, "integrate_free_motion");
  const auto n = static_cast<std::size_t>(std::ceil((t_end - s0.t) / step - 1e-12));
  const double h = (t_end - s0.t) / static_cast<double>(n);

  Trajectory tr;
  tr.step = h;
  tr.t.reserve(n + 1);
  tr.t.push_back(s0.t);
  tr.x.push_back(s0.x);
  tr.v.push_back(s0.v);
  detail::Phase p{s0.x, s0.v};
  for (std::size_t k = 0; k < n; ++k) {
    const double t = s0.t + static_cast<double>(k) * h;
    const auto k1 = detail::phase_rate(t, p, cfg, model);
    const auto k2 = detail::phase_rate(t + h / 2, detail::axpy(p, h / 2, k1), cfg, model);
    const auto k3 = detail::phase_rate(t + h / 2, detail::axpy(p, h / 2, k2), cfg, model);
    const auto k4 = detail::phase_rate(t + h, detail::axpy(p, h, k3), cfg, model);
    for (int i = 0; i < 3; ++i) {
      p.x[i] += h / 6 * (k1.x[i] + 2 * k2.x[i] + 2 * k3.x[i] + k4.x[i]);
      p.v[i] += h / 6 * (k1.v[i] + 2 * k2.v[i] + 2 * k3.v[i] + k4.v[i]);
    }
    const double tn = s0.t + static_cast<double>(k + 1) * h;
    require_chart(Point4{tn, p.x[0], p.x[1], p.x[2]}, cfg, "integrate_free_motion");
    tr.t.push_back(tn);
    tr.x.push_back(p.x);
    tr.v.push_back(p.v);
  }
  return tr;
}

// CSV: t,x1,x2,x3,v1,v2,v3,straightness_error
inline void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,x1,x2,x3,v1,v2,v3,straightness_error\n";
  const auto prec = os.precision(17);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    os << tr.t[k];
    for (double c : tr.x[k]) os << ',' << c;
    for (double c : tr.v[k]) os << ',' << c;
    os << ',' << tr.straightness_error(k) << '\n';
  }
  os.precision(prec);
}

}  // namespace tpd
