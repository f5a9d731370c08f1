#pragma once

// Closed-form induced tensors on the b = 1 de Sitter chart, together with
// the constant ambient tensors they come from. Each closed form has a
// pullback counterpart in embedding.hpp, and the tests compare the two.
//
//   C = a dT^2 + 2b dT dX + (2b - a) dX^2 + (b - a)(dY^2 + dZ^2 + dW^2)
//   D = (dT + dX) ^ (a dY + b dZ + c dW)
//   V = (a, 0, 0, 0, -a),  W = (a, a, 0, 0, 0)

#include <cmath>
#include <optional>

#include "tpd/core/matrix.hpp"
#include "tpd/geometry/embedding.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

// Free constants of an induced tensor family.
struct FormParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

inline const GeometryConfig& unit_de_sitter() {
  static const GeometryConfig cfg{1.0, 1.0, 1.0, Branch::dS};
  return cfg;
}

namespace detail {

// 1 + eta(x, x), required positive.
inline double unit_chart_q(const Point4& x, const char* where) {
  const double n = 1.0 + eta_xx(x);
  if (!(n > 0.0)) throw DomainError(std::string(where) + ": point outside the chart domain");
  return n;
}

}  // namespace detail

inline Mat5 ambient_C(const FormParams& p) {
  Mat5 C = Mat5::zero();
  C(0, 0) = p.a;
  C(0, 1) = C(1, 0) = p.b;
  C(1, 1) = 2 * p.b - p.a;
  C(2, 2) = C(3, 3) = C(4, 4) = p.b - p.a;
  return C;
}

inline Mat5 ambient_D(const FormParams& p) {
  Mat5 D = Mat5::zero();
  const double row[3] = {p.a, p.b, p.c};
  for (int k = 0; k < 3; ++k) {
    D(0, k + 2) = D(1, k + 2) = row[k];
    D(k + 2, 0) = D(k + 2, 1) = -row[k];
  }
  return D;
}

inline Vec<double, 5> ambient_V(double a) { return {a, 0.0, 0.0, 0.0, -a}; }
inline Vec<double, 5> ambient_W(double a) { return {a, a, 0.0, 0.0, 0.0}; }

/// Induced quadratic form C_mn in closed form.
inline QuadForm4 induced_C(const Point4& x, const FormParams& p) {
  const double n = detail::unit_chart_q(x, "induced_C");
  const double r = spatial_xx(x);
  const double x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
  const double sb = p.b;
  const double k = p.b - p.a;
  // Components of n^(3/2) d(T + X).
  const double l0 = 1.0 + r + x0 * x1;
  const double l1 = n - x1 * x1 - x0 * x1;
  const double l2 = -(x0 * x2 + x1 * x2);
  const double l3 = -(x0 * x3 + x1 * x3);

  QuadForm4 C;
  C(0, 0) = sb * l0 * l0 / n - k * (1.0 + r);
  C(0, 1) = sb * l0 * l1 / n + k * x0 * x1;
  C(0, 2) = sb * l0 * l2 / n + k * x0 * x2;
  C(0, 3) = sb * l0 * l3 / n + k * x0 * x3;
  C(1, 1) = sb * l1 * l1 / n + k * (n - x1 * x1);
  C(1, 2) = sb * l1 * l2 / n - k * x1 * x2;
  C(1, 3) = sb * l1 * l3 / n - k * x1 * x3;
  C(2, 2) = sb * l2 * l2 / n + k * (n - x2 * x2);
  C(2, 3) = sb * x2 * x3 * (x0 + x1) * (x0 + x1) / n - k * x2 * x3;
  C(3, 3) = sb * l3 * l3 / n + k * (n - x3 * x3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) C(i, j) = C(j, i);
  const double n2 = n * n;
  for (double& e : C.a) e /= n2;
  return C;
}

/// Induced two-form D_mn (D = 1/2 D_mn dx^m ^ dx^n) in closed form.
inline TwoForm4 induced_D(const Point4& x, const FormParams& p) {
  const double n = detail::unit_chart_q(x, "induced_D");
  const double x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3];
  const double a = p.a, b = p.b, c = p.c;
  const double lin = a * x2 + b * x3 + c;

  TwoForm4 D = TwoForm4::zero();
  D(0, 1) = -(x0 + x1) * lin;
  D(0, 2) = a * (1.0 + x1 * x1 + x3 * x3 + x0 * x1) - b * x2 * x3 - c * x2;
  D(0, 3) = b * (1.0 + x1 * x1 + x2 * x2 + x0 * x1) - a * x2 * x3 - c * x3;
  D(1, 2) = a * (1.0 - x0 * x0 + x3 * x3 - x0 * x1) - b * x2 * x3 - c * x2;
  D(1, 3) = b * (1.0 - x0 * x0 + x2 * x2 - x0 * x1) - a * x2 * x3 - c * x3;
  D(2, 3) = (x0 + x1) * (a * x3 - b * x2);
  const double n2 = n * n;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      D(i, j) /= n2;
      D(j, i) = -D(i, j);
    }
  return D;
}

/// A potential for induced_D: the pullback of (T + X)(a dY + b dZ + c dW),
///   U = (x0 + x1) / q^2 [ q (a dx2 + b dx3) - (a x2 + b x3 + c) eta(x, dx) ].
inline OneForm4 induced_U(const Point4& x, const FormParams& p) {
  const double n = detail::unit_chart_q(x, "induced_U");
  const double s = x[0] + x[1];
  const double lin = p.a * x[2] + p.b * x[3] + p.c;
  const double f = s / (n * n);
  return {f * x[0] * lin, -f * x[1] * lin, f * (p.a * n - x[2] * lin), f * (p.b * n - x[3] * lin)};
}

// U exactly as displayed alongside D: prefactor (x0 + x1) / q and the
// coefficient a on both the dx2 and dx3 terms. Its exterior derivative is
// not D; see the geometry tests.
inline OneForm4 induced_U_printed(const Point4& x, const FormParams& p) {
  const double n = detail::unit_chart_q(x, "induced_U_printed");
  const double s = x[0] + x[1];
  const double lin = p.a * x[2] + p.b * x[3] + p.c;
  const double f = s / n;
  return {f * x[0] * lin, -f * x[1] * lin, f * (p.a * n - x[2] * lin), f * (p.a * n - x[3] * lin)};
}

/// V_mu as displayed: a q^(-3/2) (1 + x.x - x0, x^i (1 - x0)).
inline OneForm4 induced_V(const Point4& x, double a) {
  const double n = detail::unit_chart_q(x, "induced_V");
  const double f = a * std::pow(n, -1.5);
  return {f * (1.0 + spatial_xx(x) - x[0]), f * x[1] * (1.0 - x[0]), f * x[2] * (1.0 - x[0]),
          f * x[3] * (1.0 - x[0])};
}

/// W_mu as displayed: a q^(-3/2) [ q d(x0 + x1) + (x0 + x1)(x0 dx0 - x^i dx^i) ].
inline OneForm4 induced_W(const Point4& x, double a) {
  const double n = detail::unit_chart_q(x, "induced_W");
  const double f = a * std::pow(n, -1.5);
  const double s = x[0] + x[1];
  return {f * (n + s * x[0]), f * (n - s * x[1]), -f * s * x[2], -f * s * x[3]};
}

// How a displayed one-form relates to the pullback of an ambient covector:
// the global sign s with displayed = s * pullback, if there is one.
struct OneFormRelation {
  std::optional<double> raw_sign;      // covector = the vector's own components
  std::optional<double> lowered_sign;  // covector = eta5 * vector
  double raw_residual;
  double lowered_residual;
};

namespace detail {

inline std::optional<double> relating_sign(const OneForm4& shown, const OneForm4& pulled, double tol,
                                           double& residual) {
  double plus = 0.0, minus = 0.0;
  for (int k = 0; k < 4; ++k) {
    plus = std::max(plus, std::abs(shown[k] - pulled[k]));
    minus = std::max(minus, std::abs(shown[k] + pulled[k]));
  }
  residual = std::min(plus, minus);
  if (plus <= tol) return 1.0;
  if (minus <= tol) return -1.0;
  return std::nullopt;
}

}  // namespace detail

/// Compares a displayed one-form against the pullbacks of both index
/// placements of the ambient vector at one point.
inline OneFormRelation relate_one_form(const OneForm4& shown, const Vec<double, 5>& ambient_vector,
                                       const Point4& x, double tol = 1e-12) {
  const auto& cfg = unit_de_sitter();
  const OneForm4 raw = pullback_one_form(ambient_vector, x, cfg);
  const OneForm4 low = pullback_one_form(eta5() * ambient_vector, x, cfg);
  OneFormRelation rel{};
  rel.raw_sign = detail::relating_sign(shown, raw, tol, rel.raw_residual);
  rel.lowered_sign = detail::relating_sign(shown, low, tol, rel.lowered_residual);
  return rel;
}

}  // namespace tpd
