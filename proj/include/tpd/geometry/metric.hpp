#pragma once

// The two-parameter quadratic form
//   B_mn = A0 eta_mn + A1 eta_ma eta_nb x^a x^b,
//   A0 = a / (b + eta(x, x)),  A1 = -a / (b + eta(x, x))^2,
// its inverse, and the leading-minor signature test.

#include <cmath>
#include <string>

#include "tpd/core/dual.hpp"
#include "tpd/core/errors.hpp"
#include "tpd/core/matrix.hpp"

namespace tpd {

enum class Branch { dS, AdS };

inline std::string to_string(Branch b) { return b == Branch::dS ? "dS" : "AdS"; }

inline Branch parse_branch(const std::string& s) {
  if (s == "dS" || s == "ds") return Branch::dS;
  if (s == "AdS" || s == "ads") return Branch::AdS;
  throw InvalidInput("unknown branch: " + s);
}

struct GeometryConfig {
  double a = 1.0;
  double b = 1.0;
  double l1 = 1.0;
  Branch branch = Branch::dS;

  // dS requires a, b > 0; AdS requires a, b < 0.
  void validate() const {
    if (!(l1 > 0.0)) throw InvalidInput("GeometryConfig: l1 must be positive");
    if (branch == Branch::dS && !(a > 0.0 && b > 0.0))
      throw InvalidInput("GeometryConfig: dS branch needs a > 0 and b > 0");
    if (branch == Branch::AdS && !(a < 0.0 && b < 0.0))
      throw InvalidInput("GeometryConfig: AdS branch needs a < 0 and b < 0");
  }

  // Sign of the hypersurface constraint and of the projective denominator
  // b + eta(x, x) on this branch.
  double sheet_sign() const { return branch == Branch::dS ? 1.0 : -1.0; }
};

using Point4 = Vec<double, 4>;
using QuadForm4 = Mat<double, 4>;
using TwoForm4 = Mat<double, 4>;
using OneForm4 = Vec<double, 4>;

template <class S>
S eta_xx(const Vec<S, 4>& x) {
  return -x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

template <class S>
S spatial_xx(const Vec<S, 4>& x) {
  return x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

template <class S>
Vec<S, 4> lower(const Vec<S, 4>& x) {
  return {-x[0], x[1], x[2], x[3]};
}

// Dimensionless chart coordinate x / l1.
template <class S>
Vec<S, 4> chart_coordinate(const Vec<S, 4>& x, const GeometryConfig& cfg) {
  if (cfg.l1 == 1.0) return x;
  Vec<S, 4> xi;
  for (int k = 0; k < 4; ++k) xi[k] = x[k] / cfg.l1;
  return xi;
}

/// dS: b - t^2 + x.x > 0. AdS: b + x.x < 0.
inline bool in_chart(const Point4& x, const GeometryConfig& cfg) {
  const Point4 xi = chart_coordinate(x, cfg);
  if (cfg.branch == Branch::dS) return cfg.b + eta_xx(xi) > 0.0;
  return cfg.b + spatial_xx(xi) < 0.0;
}

template <class S>
void require_chart(const Vec<S, 4>& x, const GeometryConfig& cfg, const char* where) {
  const Point4 xv{value_of(x[0]), value_of(x[1]), value_of(x[2]), value_of(x[3])};
  if (!in_chart(xv, cfg)) throw DomainError(std::string(where) + ": point outside the chart domain");
}

// Alternative coefficient functions, used to show that only the Beltrami
// pair solves the inertia conditions.
struct CoefficientModel {
  enum class Kind { beltrami, flat } kind = Kind::beltrami;
  double a1_scale = 1.0;  // multiplies A1
};

template <class S>
struct Coefficients {
  S a0;
  S a1;
};

template <class S>
Coefficients<S> metric_coefficients(const Vec<S, 4>& xi, const GeometryConfig& cfg,
                                    const CoefficientModel& model = {}) {
  if (model.kind == CoefficientModel::Kind::flat) return {S(cfg.a / cfg.b), S(0.0)};
  const S q = cfg.b + eta_xx(xi);
  const S a0 = cfg.a / q;
  const S a1 = (-cfg.a * model.a1_scale) / (q * q);
  return {a0, a1};
}

/// B_mn at x. Templated so that dual numbers can differentiate through it.
template <class S>
Mat<S, 4> metric_B(const Vec<S, 4>& x, const GeometryConfig& cfg, const CoefficientModel& model = {}) {
  require_chart(x, cfg, "metric_B");
  const Vec<S, 4> xi = chart_coordinate(x, cfg);
  const auto [a0, a1] = metric_coefficients(xi, cfg, model);
  const Vec<S, 4> u = lower(xi);
  Mat<S, 4> B;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) B(m, n) = a1 * u[m] * u[n] + (m == n ? a0 * S(eta_diag(m)) : S(0.0));
  return B;
}

// Inverse by Gauss-Jordan elimination.
inline QuadForm4 inverse_B(const Point4& x, const GeometryConfig& cfg) {
  return inverse(metric_B(x, cfg));
}

// Closed-form inverse ((b + eta(x,x)) / a) (eta + x x^T / b), Sherman-Morrison.
inline QuadForm4 inverse_B_closed_form(const Point4& x, const GeometryConfig& cfg) {
  require_chart(x, cfg, "inverse_B_closed_form");
  const Point4 xi = chart_coordinate(x, cfg);
  const double q = cfg.b + eta_xx(xi);
  QuadForm4 inv;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      inv(m, n) = (q / cfg.a) * ((m == n ? eta_diag(m) : 0.0) + xi[m] * xi[n] / cfg.b);
  return inv;
}

// The inverse as printed for a = b = 1: (eta^mn - x^m x^n) / (1 - t^2 + x.x).
// Kept for comparison; it does not invert B (see tests).
inline QuadForm4 inverse_B_printed(const Point4& x) {
  const double q = 1.0 + eta_xx(x);
  QuadForm4 inv;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) inv(m, n) = ((m == n ? eta_diag(m) : 0.0) - x[m] * x[n]) / q;
  return inv;
}

struct SignatureMinors {
  double b00;
  double minor1;
  double minor2;
  double minor3;
};

/// B00 and the leading principal minors of the Schur complement
/// B~_ij = B_ij - B_0i B_0j / B_00.
inline SignatureMinors signature_minors(const Point4& x, const GeometryConfig& cfg) {
  const QuadForm4 B = metric_B(x, cfg);
  const double b00 = B(0, 0);
  if (b00 == 0.0) throw DomainError("signature_minors: B00 vanishes");
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = B(i + 1, j + 1) - B(0, i + 1) * B(0, j + 1) / b00;
  const double m2 = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  return {b00, s(0, 0), m2, det(s)};
}

// The same four quantities from their rational closed forms.
inline SignatureMinors signature_minors_closed_form(const Point4& x, const GeometryConfig& cfg) {
  const Point4 xi = chart_coordinate(x, cfg);
  const double a = cfg.a;
  const double b = cfg.b;
  const double q = b + eta_xx(xi);
  const double r = b + spatial_xx(xi);
  const double x2 = xi[2] * xi[2];
  const double x3 = xi[3] * xi[3];
  return {-a * r / (q * q), a * (b + x2 + x3) / (q * r), a * a * (b + x3) / (q * q * r),
          a * a * a * b / (q * q * q * r)};
}

}  // namespace tpd
