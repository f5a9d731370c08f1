#pragma once

// The reduced Klein-Gordon mode equation chi'' + F chi' + G chi = 0 in the
// time x = atanh(t), its exact massless solution, and an RK4 solver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "tpd/core/dual.hpp"
#include "tpd/core/errors.hpp"
#include "tpd/core/quadrature.hpp"

namespace tpd {

using cplx = std::complex<double>;

struct ModeParams {
  double m2 = 0.0;
  double xi = 0.0;
  double kk = 2.0;  // k.k
  int sign = 1;     // phase branch e^{+- i ...}
  bool friction = true;  // false drops the F chi' term

  double mass_term() const { return m2 + xi; }
  void validate() const {
    if (!(m2 >= 0.0)) throw InvalidInput("ModeParams: m2 must be >= 0");
    if (sign != 1 && sign != -1) throw InvalidInput("ModeParams: sign must be +1 or -1");
    if (!std::isfinite(xi) || !std::isfinite(kk)) throw InvalidInput("ModeParams: non-finite xi or k.k");
  }
};

inline double time_reparam(double t) {
  if (!(std::abs(t) < 1.0)) throw DomainError("time_reparam: needs |t| < 1");
  return std::atanh(t);
}
inline double time_reparam_inverse(double x) { return std::tanh(x); }

/// 1 - tanh^2, evaluated as sech^2.
inline double sigma(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}
inline double sigma_printed(double x) {
  const double e = std::exp(2.0 * x);
  const double r = (e - 1.0) / (e + 1.0);
  return 1.0 - r * r;
}

inline double coeff_F(double x, bool friction = true) { return friction ? 2.0 * std::tanh(x) : 0.0; }
inline double coeff_F_printed(double x) {
  const double e = std::exp(2.0 * x);
  return 2.0 * (e - 1.0) / (e + 1.0);
}
inline double coeff_dF(double x, bool friction = true) { return friction ? 2.0 * sigma(x) : 0.0; }

/// (m^2 + xi)/sigma + k.k, written with cosh^2 so it stays finite.
inline double coeff_G(double x, const ModeParams& p) {
  const double c = std::cosh(x);
  return p.mass_term() * c * c + p.kk;
}

// ---------------------------------------------------------------- exact

inline double massless_kappa(double kk) {
  if (!(kk > 1.0)) throw DomainError("exact_massless: k.k <= 1 is the evanescent regime");
  return std::sqrt(kk - 1.0);
}

/// e^x/(1+e^{2x}) (k.k-1)^{-1/4} e^{+- i sqrt(k.k-1) x}.
inline cplx exact_massless(double kk, int sign, double x) {
  const double kappa = massless_kappa(kk);
  const double env = 0.5 / std::cosh(x) / std::sqrt(kappa);
  return std::polar(env, sign * kappa * x);
}
inline cplx exact_massless_derivative(double kk, int sign, double x) {
  const double kappa = massless_kappa(kk);
  return exact_massless(kk, sign, x) * cplx(-std::tanh(x), sign * kappa);
}

/// |chi'' + F chi' + k.k chi| with derivatives from nested dual numbers.
inline double exact_massless_residual(double kk, int sign, double x) {
  using D1 = Dual<double, 1>;
  using D2 = Dual<D1, 1>;
  const double kappa = massless_kappa(kk);
  const D2 X = D2::variable(D1::variable(x, 0), 0);
  const D2 env = 0.5 / cosh(X) / std::sqrt(kappa);
  const D2 re = env * cos(sign * kappa * X), im = env * sin(sign * kappa * X);
  const cplx f(re.v.v, im.v.v), df(re.d[0].v, im.d[0].v), ddf(re.d[0].d[0], im.d[0].d[0]);
  return std::abs(ddf + coeff_F(x) * df + kk * f);
}

// ---------------------------------------------------------------- solutions

enum class ModeMethod { exact, ode, wkb };

inline std::string to_string(ModeMethod m) {
  switch (m) {
    case ModeMethod::exact: return "exact";
    case ModeMethod::ode: return "ode";
    case ModeMethod::wkb: return "wkb";
  }
  return "?";
}

struct ModeSolution {
  std::vector<double> x;  // uniform
  std::vector<cplx> chi, dchi;
  ModeMethod method = ModeMethod::ode;
  int order = 0;  // WKB order when method == wkb
  double max_residual = 0.0;

  std::size_t size() const { return x.size(); }
  double step() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
  std::string tag() const { return method == ModeMethod::wkb ? "wkb-" + std::to_string(order) : to_string(method); }
};

inline constexpr double kModeResidualTolerance = 1e-7;

/// Max over interior nodes of |(dchi)' + F dchi + G chi| and |chi' - dchi|,
/// derivatives by central 5-point differences. Each node's residual is
/// divided by the size of its terms when that exceeds 1.
inline double mode_residual(const ModeSolution& s, const ModeParams& p) {
  const std::size_t n = s.size();
  if (n < 5) return 0.0;
  const double h = s.step();
  double r = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const cplx ddchi = central_d1(s.dchi, i, h);
    const cplx dchi = central_d1(s.chi, i, h);
    const cplx friction = coeff_F(s.x[i], p.friction) * s.dchi[i], restoring = coeff_G(s.x[i], p) * s.chi[i];
    const double scale = std::max({1.0, std::abs(ddchi) + std::abs(friction) + std::abs(restoring)});
    r = std::max(r, std::abs(ddchi + friction + restoring) / scale);
    r = std::max(r, std::abs(dchi - s.dchi[i]) / std::max(1.0, std::abs(s.dchi[i])));
  }
  return r;
}

inline std::vector<double> uniform_grid(double lo, double hi, std::size_t nodes) {
  if (nodes < 2) throw InvalidInput("uniform_grid: needs at least 2 nodes");
  if (!(hi > lo)) throw InvalidInput("uniform_grid: empty range");
  std::vector<double> g(nodes);
  const double h = (hi - lo) / static_cast<double>(nodes - 1);
  for (std::size_t i = 0; i < nodes; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

inline ModeSolution exact_massless_solution(const ModeParams& p, double lo, double hi, std::size_t nodes) {
  p.validate();
  ModeSolution s;
  s.method = ModeMethod::exact;
  s.x = uniform_grid(lo, hi, nodes);
  for (double x : s.x) {
    s.chi.push_back(exact_massless(p.kk, p.sign, x));
    s.dchi.push_back(exact_massless_derivative(p.kk, p.sign, x));
  }
  s.max_residual = mode_residual(s, p);
  return s;
}

/// RK4 from (chi0, dchi0) at lo to hi with steps no longer than `step`.
inline ModeSolution solve_mode_ode(const ModeParams& p, cplx chi0, cplx dchi0, double lo, double hi, double step) {
  p.validate();
  if (!(step > 0.0)) throw InvalidInput("solve_mode_ode: step must be positive");
  if (!(hi > lo) || !std::isfinite(hi) || !std::isfinite(lo)) throw InvalidInput("solve_mode_ode: bad range");
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9));
  const double h = (hi - lo) / static_cast<double>(n);

  auto rate = [&](double x, cplx c, cplx dc, cplx& oc, cplx& odc) {
    oc = dc;
    odc = -coeff_F(x, p.friction) * dc - coeff_G(x, p) * c;
  };

  ModeSolution s;
  s.method = ModeMethod::ode;
  s.x.reserve(n + 1);
  s.chi.reserve(n + 1);
  s.dchi.reserve(n + 1);
  cplx c = chi0, dc = dchi0;
  s.x.push_back(lo);
  s.chi.push_back(c);
  s.dchi.push_back(dc);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = lo + h * static_cast<double>(k);
    cplx k1c, k1d, k2c, k2d, k3c, k3d, k4c, k4d;
    rate(x, c, dc, k1c, k1d);
    rate(x + 0.5 * h, c + 0.5 * h * k1c, dc + 0.5 * h * k1d, k2c, k2d);
    rate(x + 0.5 * h, c + 0.5 * h * k2c, dc + 0.5 * h * k2d, k3c, k3d);
    rate(x + h, c + h * k3c, dc + h * k3d, k4c, k4d);
    c += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
    dc += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    s.x.push_back(k + 1 == n ? hi : lo + h * static_cast<double>(k + 1));
    s.chi.push_back(c);
    s.dchi.push_back(dc);
  }
  s.max_residual = mode_residual(s, p);
  return s;
}

/// (chi1 dchi2 - chi2 dchi1) cosh^2 x at every node of two solutions on one grid.
inline std::vector<cplx> scaled_wronskian(const ModeSolution& a, const ModeSolution& b) {
  if (a.size() != b.size()) throw InvalidInput("scaled_wronskian: grids differ");
  std::vector<cplx> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double c = std::cosh(a.x[i]);
    w[i] = (a.chi[i] * b.dchi[i] - b.chi[i] * a.dchi[i]) * c * c;
  }
  return w;
}

}  // namespace tpd
