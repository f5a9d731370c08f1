#pragma once

// Free particle in the two-parameter quadratic form B:
//   L(t, x, v) = sqrt|B_mn xdot^m xdot^n|,  xdot = (1, v).
// Derivatives come from nested dual numbers over z = (t, x1, x2, x3, v1, v2, v3).

#include <cmath>

#include "tpd/core/dual.hpp"
#include "tpd/core/errors.hpp"
#include "tpd/core/matrix.hpp"
#include "tpd/geometry/induced.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

using Vec3 = Vec<double, 3>;

struct KinState {
  double t = 0.0;
  Vec3 x{};
  Vec3 v{};
};

inline Point4 event_of(const KinState& s) { return {s.t, s.x[0], s.x[1], s.x[2]}; }

// B_mn xdot^m xdot^n for a general tangent vector.
template <class S>
S quadratic_form(const Vec<S, 4>& x, const Vec<S, 4>& xdot, const GeometryConfig& cfg,
                 const CoefficientModel& model = {}) {
  const Mat<S, 4> B = metric_B(x, cfg, model);
  S r(0.0);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) r += B(m, n) * xdot[m] * xdot[n];
  return r;
}

// sqrt(-B xdot xdot); only timelike tangents are accepted.
template <class S>
S lagrangian_generic(const Vec<S, 4>& x, const Vec<S, 4>& xdot, const GeometryConfig& cfg,
                     const CoefficientModel& model = {}) {
  const S r = quadratic_form(x, xdot, cfg, model);
  if (!(value_of(r) < 0.0)) throw DomainError("lagrangian: tangent is not timelike");
  using std::sqrt;
  return sqrt(-r);
}

/// L at a kinematic state.
inline double lagrangian(const KinState& s, const GeometryConfig& cfg, const CoefficientModel& model = {}) {
  const Point4 xdot{1.0, s.v[0], s.v[1], s.v[2]};
  return lagrangian_generic(event_of(s), xdot, cfg, model);
}

namespace detail {

using D1 = Dual<double, 7>;
using D2 = Dual<D1, 7>;

// L with all seven state variables seeded for second derivatives.
inline D2 seeded_lagrangian(const KinState& s, const GeometryConfig& cfg, const CoefficientModel& model) {
  const double z[7] = {s.t, s.x[0], s.x[1], s.x[2], s.v[0], s.v[1], s.v[2]};
  D2 zd[7];
  for (int i = 0; i < 7; ++i) {
    zd[i].v = D1::variable(z[i], i);
    zd[i].d[i] = D1(1.0);
  }
  const Vec<D2, 4> x{zd[0], zd[1], zd[2], zd[3]};
  const Vec<D2, 4> xdot{D2(1.0), zd[4], zd[5], zd[6]};
  return lagrangian_generic(x, xdot, cfg, model);
}

}  // namespace detail

// First and second partial derivatives of L at a state.
struct LagrangianJet {
  double value;
  Vec<double, 7> grad;
  Mat<double, 7> hess;
};

inline LagrangianJet lagrangian_jet(const KinState& s, const GeometryConfig& cfg,
                                    const CoefficientModel& model = {}) {
  const detail::D2 L = detail::seeded_lagrangian(s, cfg, model);
  LagrangianJet j{};
  j.value = L.v.v;
  for (int i = 0; i < 7; ++i) {
    j.grad[i] = L.v.d[i];
    for (int k = 0; k < 7; ++k) j.hess(i, k) = L.d[i].d[k];
  }
  return j;
}

/// dL/dx^i - d^2L/dt dv^i - v^j d^2L/dx^j dv^i. Zero iff the straight
/// line through the state solves the Euler-Lagrange equations.
inline Vec3 el_residual(const KinState& s, const GeometryConfig& cfg, const CoefficientModel& model = {}) {
  const auto j = lagrangian_jet(s, cfg, model);
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double acc = j.grad[1 + i] - j.hess(0, 4 + i);
    for (int k = 0; k < 3; ++k) acc -= s.v[k] * j.hess(1 + k, 4 + i);
    r[i] = acc;
  }
  return r;
}

struct VelocityHessian {
  Mat3 H;
  double det;
};

/// d^2L / dv^i dv^j and its determinant.
inline VelocityHessian hessian_vv(const KinState& s, const GeometryConfig& cfg, const CoefficientModel& model = {}) {
  const auto j = lagrangian_jet(s, cfg, model);
  VelocityHessian h{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) h.H(i, k) = j.hess(4 + i, 4 + k);
  h.det = det(h.H);
  return h;
}

// The determinant formula quoted for x -> 0: -1 / |b/a (v.v - 1)|^(3/2).
inline double hessian_det_quoted(double a, double b, double vv) {
  return -1.0 / std::pow(std::abs(b / a * (vv - 1.0)), 1.5);
}

// Direct evaluation at x = 0: L = sqrt(a/b) sqrt(1 - v.v), whose velocity
// Hessian has eigenvalues -sqrt(a/b) / f (twice) and -sqrt(a/b) / f^3.
inline double hessian_det_origin(double a, double b, double vv) {
  return -std::pow(a / b, 1.5) * std::pow(1.0 - vv, -2.5);
}

/// Acceleration from the Euler-Lagrange equations: H a = el_residual.
inline Vec3 acceleration(const KinState& s, const GeometryConfig& cfg, const CoefficientModel& model = {}) {
  const auto j = lagrangian_jet(s, cfg, model);
  Mat3 H;
  Vec3 rhs;
  for (int i = 0; i < 3; ++i) {
    rhs[i] = j.grad[1 + i] - j.hess(0, 4 + i);
    for (int k = 0; k < 3; ++k) {
      H(i, k) = j.hess(4 + i, 4 + k);
      rhs[i] -= s.v[k] * j.hess(1 + k, 4 + i);
    }
  }
  const double scale = std::max(1.0, max_abs(H));
  if (std::abs(det(H)) < 1e-14 * scale * scale * scale)
    throw DomainError("acceleration: velocity Hessian is degenerate");
  return solve(H, rhs);
}

// Residuals of the first-order system satisfied by A0, A1:
//   d_i A0 - 2 A1 x^i,  d_t A0 + 2 A1 t,  A0 d_i A1 - 4 A1^2 x^i,  A0 d_t A1 + 4 A1^2 t.
struct PdeResiduals {
  Vec3 a0_space;
  double a0_time;
  Vec3 a1_space;
  double a1_time;

  double max_abs() const {
    double m = std::max(std::abs(a0_time), std::abs(a1_time));
    for (int i = 0; i < 3; ++i) m = std::max({m, std::abs(a0_space[i]), std::abs(a1_space[i])});
    return m;
  }
};

inline PdeResiduals pde_residuals(const Point4& x, const GeometryConfig& cfg, const CoefficientModel& model = {}) {
  require_chart(x, cfg, "pde_residuals");
  using D = Dual<double, 4>;
  const Point4 xi = chart_coordinate(x, cfg);
  Vec<D, 4> xd;
  for (int k = 0; k < 4; ++k) xd[k] = D::variable(xi[k], k);
  const auto [A0, A1] = metric_coefficients(xd, cfg, model);
  PdeResiduals r{};
  const double t = xi[0];
  r.a0_time = A0.d[0] + 2 * A1.v * t;
  r.a1_time = A0.v * A1.d[0] + 4 * A1.v * A1.v * t;
  for (int i = 0; i < 3; ++i) {
    r.a0_space[i] = A0.d[1 + i] - 2 * A1.v * xi[1 + i];
    r.a1_space[i] = A0.v * A1.d[1 + i] - 4 * A1.v * A1.v * xi[1 + i];
  }
  return r;
}

// Short distance action for a = b = 1:
//   1/2 ln[(s + t)/(s - t)] - |v| ln(|v| t + s),  s = sqrt(1 - v.v (1 - t^2)).
template <class S>
S action_shortdist(const S& t, double vv) {
  using std::log;
  using std::sqrt;
  if (!(std::abs(value_of(t)) < 1.0)) throw DomainError("action_shortdist: needs t^2 < 1");
  if (vv < 0.0) throw DomainError("action_shortdist: negative v.v");
  const S rad = 1.0 - vv * (1.0 - t * t);
  if (!(value_of(rad) > 0.0)) throw DomainError("action_shortdist: 1 - v.v(1 - t^2) must be positive");
  const S s = sqrt(rad);
  const double speed = std::sqrt(vv);
  return 0.5 * log((s + t) / (s - t)) - speed * log(speed * t + s);
}

// The integrand sqrt(1/(1-t^2)^2 - v.v/(1-t^2)).
inline double action_shortdist_integrand(double t, double vv) {
  const double u = 1.0 - t * t;
  return std::sqrt(1.0 / (u * u) - vv / u);
}

/// d/dt of the closed form minus the integrand.
inline double action_shortdist_check(double t, double vv) {
  using D = Dual<double, 1>;
  const D S = action_shortdist(D::variable(t, 0), vv);
  return S.d[0] - action_shortdist_integrand(t, vv);
}

// Which one-form plays V in the Finsler Lagrangian.
enum class VForm {
  displayed,         // the closed form a q^(-3/2)(1 + x.x - x0, x^i (1 - x0))
  lowered_pullback,  // pullback of eta5 (a, 0, 0, 0, -a)
};

inline OneForm4 finsler_V(const Point4& x, double a, VForm form) {
  if (form == VForm::displayed) return induced_V(x, a);
  return pullback_one_form(eta5() * ambient_V(a), x, unit_de_sitter());
}

/// |B xdot xdot|^((1-delta)/2) (V.xdot)^delta on the b = 1 chart, for a general tangent.
inline double finsler_lagrangian4(const Point4& x, const Point4& xdot, double delta, double a,
                                  VForm form = VForm::displayed) {
  if (delta == 0.0 || delta == 1.0) throw InvalidInput("finsler_lagrangian: delta must differ from 0 and 1");
  const double r = quadratic_form(x, xdot, unit_de_sitter());
  const OneForm4 V = finsler_V(x, a, form);
  const double vx = dot(V, xdot);
  const bool integral = delta == std::floor(delta);
  if (vx < 0.0 && !integral) throw DomainError("finsler_lagrangian: V.xdot < 0 with non-integer power");
  const double e = 0.5 * (1.0 - delta);
  if (r == 0.0 && e < 0.0) throw DomainError("finsler_lagrangian: null tangent");
  return std::pow(std::abs(r), e) * std::pow(vx, delta);
}

/// The Finsler Lagrangian at a kinematic state, xdot = (1, v).
inline double finsler_lagrangian(const KinState& s, double delta, double a, VForm form = VForm::displayed) {
  return finsler_lagrangian4(event_of(s), Point4{1.0, s.v[0], s.v[1], s.v[2]}, delta, a, form);
}

}  // namespace tpd
