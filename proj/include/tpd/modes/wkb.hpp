#pragma once

// WKB orders for the mode equation. w is iterated on a uniform grid through
//   w^2 = G - {int w; x}_S / 2 - F'/2 - F^2/4,  {int w; x}_S = w''/w - 3/2 (w'/w)^2
// with central 5-point stencils, so every step trims two nodes per side.

#include <cmath>
#include <cstddef>
#include <vector>

#include "tpd/modes/mode_equation.hpp"

namespace tpd {

struct WKBState {
  double x0 = 0.0;  // first node
  double h = 0.0;
  std::vector<double> w;
  int order = 0;

  std::size_t size() const { return w.size(); }
  double x(std::size_t i) const { return x0 + h * static_cast<double>(i); }
  std::vector<double> grid() const {
    std::vector<double> g(size());
    for (std::size_t i = 0; i < size(); ++i) g[i] = x(i);
    return g;
  }
};

inline double wkb_radicand0(const ModeParams& p, double x) {
  const double F = coeff_F(x, p.friction);
  return coeff_G(x, p) - 0.5 * coeff_dF(x, p.friction) - 0.25 * F * F;
}

/// Positive root of the lowest order; the branch sign lives in the phase.
/// With the F term present this is sqrt((m^2+xi) cosh^2 x + k.k - 1).
inline double wkb_w0(const ModeParams& p, double x) {
  const double r = p.friction ? p.mass_term() * std::cosh(x) * std::cosh(x) + p.kk - 1.0 : wkb_radicand0(p, x);
  if (!(r > 0.0)) throw DomainError("wkb_w0: radicand is not positive");
  return std::sqrt(r);
}

/// The same root written in exponentials.
inline double wkb_w0_printed(const ModeParams& p, double x) {
  const double e = std::exp(2.0 * x);
  const double r = p.mass_term() * (e + 1.0) * (e + 1.0) / (4.0 * e) + p.kk - 1.0;
  if (!(r > 0.0)) throw DomainError("wkb_w0_printed: radicand is not positive");
  return std::sqrt(r);
}

inline WKBState wkb_initial(const ModeParams& p, double lo, double hi, std::size_t nodes) {
  p.validate();
  const auto g = uniform_grid(lo, hi, nodes);
  WKBState s{lo, g.size() > 1 ? g[1] - g[0] : 0.0, {}, 0};
  s.w.reserve(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double x = s.x(i);
    const double r = wkb_radicand0(p, x);
    if (!(r > 0.0)) throw TurningPoint("wkb_initial: turning point", i, x);
    s.w.push_back(wkb_w0(p, x));
  }
  return s;
}

inline double schwarzian_of_integral(const std::vector<double>& w, std::size_t i, double h) {
  const double d1 = central_d1(w, i, h) / w[i];
  return central_d2(w, i, h) / w[i] - 1.5 * d1 * d1;
}

inline WKBState wkb_iterate(const WKBState& s, const ModeParams& p) {
  if (s.size() < 5) throw InvalidInput("wkb_iterate: needs at least 5 nodes");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!(s.w[i] > 0.0)) throw DomainError("wkb_iterate: w must be positive on the grid");
  WKBState out{s.x(2), s.h, {}, s.order + 1};
  out.w.reserve(s.size() - 4);
  for (std::size_t i = 2; i + 2 < s.size(); ++i) {
    const double x = s.x(i);
    const double F = coeff_F(x, p.friction);
    const double r = coeff_G(x, p) - 0.5 * schwarzian_of_integral(s.w, i, s.h) - 0.5 * coeff_dF(x, p.friction) -
                     0.25 * F * F;
    if (!(r > 0.0)) throw TurningPoint("wkb_iterate: turning point", i, x);
    out.w.push_back(std::sqrt(r));
  }
  return out;
}

/// Runs `order` iterations from the lowest order.
inline WKBState wkb_order(const ModeParams& p, double lo, double hi, std::size_t nodes, int order) {
  if (order < 0) throw InvalidInput("wkb_order: order must be >= 0");
  if (nodes < 4 * static_cast<std::size_t>(order) + 1)
    throw InvalidInput("wkb_order: grid too small for the requested order");
  WKBState s = wkb_initial(p, lo, hi, nodes);
  for (int k = 0; k < order; ++k) s = wkb_iterate(s, p);
  return s;
}

// log cosh without overflow.
inline double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

struct WKBPhases {
  std::vector<double> s1, s2;
};

/// s1 = ln sqrt(w) + int F/2 (= ln cosh x), s2 = w'/(4w^2) + 1/8 int [w'^2/w^3 + F^2/w + 2F'/w],
/// the integral taken from the first node.
inline WKBPhases wkb_s1_s2(const WKBState& s, const ModeParams& p) {
  for (double w : s.w)
    if (!(w > 0.0)) throw DomainError("wkb_s1_s2: w must be positive");
  const auto dw = derivative4(s.w, s.h);
  WKBPhases out;
  std::vector<double> integrand(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s.x(i), w = s.w[i];
    const double F = coeff_F(x, p.friction);
    out.s1.push_back(0.5 * std::log(w) + (p.friction ? log_cosh(x) : 0.0));
    integrand[i] = dw[i] * dw[i] / (w * w * w) + F * F / w + 2.0 * coeff_dF(x, p.friction) / w;
  }
  const auto cum = cumulative_simpson(integrand, s.h);
  for (std::size_t i = 0; i < s.size(); ++i) out.s2.push_back(dw[i] / (4.0 * s.w[i] * s.w[i]) + cum[i] / 8.0);
  return out;
}

/// Ratio of e^{-int F/2} = sech x to the exponential envelope e^x/(1+e^{2x}), read at x = 0.
inline double envelope_normalization() {
  const double printed = std::exp(0.0) / (1.0 + std::exp(0.0));
  return (1.0 / std::cosh(0.0)) / printed;
}

/// First-order solution e^x/(1+e^{2x}) w^{-1/2} e^{+- i int w}, phase integral from the first node.
inline ModeSolution wkb_solution(const WKBState& s, const ModeParams& p) {
  p.validate();
  if (s.size() < 5) throw InvalidInput("wkb_solution: needs at least 5 nodes");
  const auto dw = derivative4(s.w, s.h);
  const auto phase = cumulative_simpson(s.w, s.h);
  ModeSolution out;
  out.method = ModeMethod::wkb;
  out.order = s.order;
  out.x = s.grid();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = s.x(i), w = s.w[i];
    const double env = (p.friction ? 1.0 / std::cosh(x) : 1.0) / envelope_normalization() / std::sqrt(w);
    const cplx chi = std::polar(env, p.sign * phase[i]);
    const double log_rate = (p.friction ? -std::tanh(x) : 0.0) - 0.5 * dw[i] / w;
    out.chi.push_back(chi);
    out.dchi.push_back(chi * cplx(log_rate, p.sign * w));
  }
  out.max_residual = mode_residual(out, p);
  return out;
}

}  // namespace tpd
