#pragma once

// Static-detector transition amplitude and the Fourier transform it rests on.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "tpd/core/quadrature.hpp"
#include "tpd/modes/mode_equation.hpp"

namespace tpd {

/// pi / (e^{pi w/2} + e^{-pi w/2}) = (pi/2) sech(pi w/2).
inline double fourier_closed_form(double omega) {
  const double a = 0.5 * std::numbers::pi * std::abs(omega);
  const double e = std::exp(-a);
  return std::numbers::pi * e / (1.0 + e * e);
}

/// int_{-L}^{L} e^x/(1+e^{2x}) e^{i w x} dx.
inline cplx fourier_oracle(double omega, double half_width = 40.0, double tol = 1e-13) {
  if (!(half_width > 0.0)) throw InvalidInput("fourier_oracle: half-width must be positive");
  auto f = [omega](double x) { return std::polar(0.5 / std::cosh(x), omega * x); };
  const int panels = std::max(8, static_cast<int>(std::ceil(half_width * (1.0 + std::abs(omega)))));
  return adaptive_simpson<cplx>(f, -half_width, half_width, tol, panels);
}

// Value the text quotes for the omega = 0 integral.
inline constexpr double kQuotedZeroFrequencyIntegral = std::numbers::pi;

inline double unruh_omega(double dE, double kk, int sign = 1) { return dE + sign * massless_kappa(kk); }

/// pi (k.k-1)^{-1/4} / (e^{pi w/2} + e^{-pi w/2}), w = dE +- sqrt(k.k-1).
inline double unruh_amplitude(double dE, double kk, int sign = 1) {
  if (sign != 1 && sign != -1) throw InvalidInput("unruh_amplitude: sign must be +1 or -1");
  return fourier_closed_form(unruh_omega(dE, kk, sign)) / std::sqrt(massless_kappa(kk));
}

struct AmplitudeRow {
  double dE, kk, amplitude;
};

inline std::vector<AmplitudeRow> amplitude_table(const std::vector<double>& dE, const std::vector<double>& kk,
                                                 int sign = 1) {
  std::vector<AmplitudeRow> rows;
  rows.reserve(dE.size() * kk.size());
  for (double e : dE)
    for (double k : kk) rows.push_back({e, k, unruh_amplitude(e, k, sign)});
  return rows;
}

// Detector worldline in the time u = atanh(t): action S(u), dS/du, and k.x(u).
struct DetectorWorldline {
  std::function<double(double)> S, dS, kx;
};

inline DetectorWorldline static_detector() {
  return {[](double u) { return u; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
}

/// Short-distance action of x = v t, rewritten in u so it stays accurate as |t| -> 1:
/// S = ln(s + t) + ln cosh u - ln(1 - v.v)/2 - |v| ln(|v| t + s), s = sqrt(1 - v.v sech^2 u).
inline double inertial_detector_action(double u, double vv) {
  if (!(vv >= 0.0 && vv < 1.0)) throw DomainError("inertial_detector_action: needs 0 <= v.v < 1");
  const double t = std::tanh(u), sech = 1.0 / std::cosh(u);
  const double s = std::sqrt(1.0 - vv * sech * sech);
  const double speed = std::sqrt(vv);
  const double lc = std::abs(u) + std::log1p(std::exp(-2.0 * std::abs(u))) - std::log(2.0);
  const double l1v = std::log1p(-vv);
  if (u >= 0.0) return std::log(s + t) + lc - 0.5 * l1v - speed * std::log(speed * t + s);
  // for t < 0 use s^2 - t^2 = (1 - v.v) sech^2 u and s^2 - v.v t^2 = 1 - v.v
  return -std::log(s - t) - lc + 0.5 * l1v - speed * (l1v - std::log(s - speed * t));
}

inline DetectorWorldline inertial_detector(double vv, double k_dot_v) {
  if (!(vv >= 0.0 && vv < 1.0)) throw DomainError("inertial_detector: needs 0 <= v.v < 1");
  return {[vv](double u) { return inertial_detector_action(u, vv); },
          [vv](double u) {
            const double sech = 1.0 / std::cosh(u);
            return std::sqrt(1.0 - vv * sech * sech);
          },
          [k_dot_v](double u) { return k_dot_v * std::tanh(u); }};
}

/// int dS e^{-i k.x} chi* e^{i S dE} along the worldline by adaptive Simpson in u.
/// The mode is the one whose conjugate carries e^{+- i sqrt(k.k-1) u}, so the
/// static detector reproduces unruh_amplitude with the same sign.
inline cplx detector_amplitude(double dE, double kk, int sign, const DetectorWorldline& wl, double half_width = 30.0,
                               double tol = 1e-12) {
  massless_kappa(kk);
  auto f = [&](double u) {
    const cplx chi_conj = std::conj(exact_massless(kk, -sign, u));
    return wl.dS(u) * chi_conj * std::polar(1.0, dE * wl.S(u) - wl.kx(u));
  };
  const int panels = std::max(8, static_cast<int>(std::ceil(half_width * (1.0 + std::abs(dE) + std::sqrt(kk)))));
  return adaptive_simpson<cplx>(f, -half_width, half_width, tol, panels);
}

}  // namespace tpd
