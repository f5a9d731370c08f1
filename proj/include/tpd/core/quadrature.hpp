#pragma once

// Simpson quadrature and 4th-order finite-difference stencils on uniform grids.

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "tpd/core/errors.hpp"

namespace tpd {

namespace detail {

template <class F, class T>
T simpson_step(const F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const T flm = f(lm), frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (!std::isfinite(std::abs(delta))) throw DomainError("adaptive_simpson: non-finite integrand");
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(delta) <= std::max(15.0 * tol, floor)) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson on [a, b], started from `panels` equal panels.
/// T is double or std::complex<double>.
template <class T, class F>
T adaptive_simpson(const F& f, double a, double b, double tol, int panels = 1, int max_depth = 30) {
  if (panels < 1) throw InvalidInput("adaptive_simpson: panels must be positive");
  const double w = (b - a) / panels;
  T total{};
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * w, hi = (k + 1 == panels) ? b : lo + w;
    const double mid = 0.5 * (lo + hi);
    const T flo = f(lo), fmid = f(mid), fhi = f(hi);
    const T whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += detail::simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol / panels, max_depth);
  }
  return total;
}

/// Running integral from the first node; Simpson pairs, with a 3-point
/// rule for the first interval.
template <class T>
std::vector<T> cumulative_simpson(const std::vector<T>& f, double h) {
  std::vector<T> out(f.size(), T{});
  if (f.size() < 2) return out;
  if (f.size() == 2) {
    out[1] = 0.5 * h * (f[0] + f[1]);
    return out;
  }
  out[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
  for (std::size_t i = 2; i < f.size(); ++i) out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
  return out;
}

/// First derivative: central 5-point inside, one-sided 5-point at the edges.
template <class T>
std::vector<T> derivative4(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw InvalidInput("derivative4: needs at least 5 nodes");
  std::vector<T> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i) d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
  d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) / (12.0 * h);
  d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) / (12.0 * h);
  return d;
}

// Central 5-point stencils at node i (needs 2 <= i < n - 2).
template <class T>
T central_d1(const std::vector<T>& f, std::size_t i, double h) {
  return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
}
template <class T>
T central_d2(const std::vector<T>& f, std::size_t i, double h) {
  return (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h);
}

}  // namespace tpd
