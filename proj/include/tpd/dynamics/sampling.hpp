#pragma once

// Seeded samplers for chart points and timelike states.

#include <cmath>

#include "tpd/core/random.hpp"
#include "tpd/dynamics/lagrangian.hpp"

namespace tpd {

/// A chart point with |q| >= margin (coordinates in units of l1). dS points
/// lie in [-box, box]^4; AdS points have spatial part inside the ball
/// x.x < -b and |t| <= 2.
inline Point4 random_chart_point(Rng& rng, const GeometryConfig& cfg, double box = 0.8, double margin = 0.05) {
  for (;;) {
    Point4 x;
    if (cfg.branch == Branch::dS) {
      for (auto& c : x) c = rng.uniform(-box, box);
      if (cfg.b + eta_xx(x) <= margin) continue;
    } else {
      const double r = std::sqrt(-cfg.b);
      x = {rng.uniform(-2.0, 2.0), rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r)};
      if (cfg.b + spatial_xx(x) >= -margin) continue;
    }
    for (auto& c : x) c *= cfg.l1;
    if (in_chart(x, cfg)) return x;
  }
}

/// A state whose event is in the chart and whose velocity is timelike for B.
inline KinState random_timelike_state(Rng& rng, const GeometryConfig& cfg, double box = 0.5, double vmax = 0.6) {
  for (;;) {
    const Point4 x = random_chart_point(rng, cfg, box, 0.1);
    const KinState s{x[0], {x[1], x[2], x[3]},
                     {rng.uniform(-vmax, vmax), rng.uniform(-vmax, vmax), rng.uniform(-vmax, vmax)}};
    if (quadratic_form(x, Point4{1.0, s.v[0], s.v[1], s.v[2]}, cfg) < -1e-3) return s;
  }
}

}  // namespace tpd
