#pragma once

// Projective (Beltrami) coordinates on the five dimensional hypersurface
//   dS:  -T^2 + X^2 + Y^2 + Z^2 + b W^2 = +1   (b > 0)
//   AdS: -T^2 + X^2 + Y^2 + Z^2 + b W^2 = -1   (b < 0)
// with x^mu = (T, X, Y, Z) / W, and pullback of constant ambient tensors.

#include <cmath>

#include "tpd/core/dual.hpp"
#include "tpd/core/matrix.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

using AmbientPoint5 = Vec<double, 5>;

// Which half of the hypersurface the chart covers.
enum class Sheet { positive_w, negative_w };

// The ambient form diag(-1, 1, 1, 1, b) whose hypersurface the chart covers.
inline Mat5 ambient_form(const GeometryConfig& cfg) { return eta5(cfg.b); }

/// (T, X, Y, Z, W) = W (x^0, x^1, x^2, x^3, 1) with W = +-1/sqrt|b + eta(x,x)|.
template <class S>
Vec<S, 5> embed(const Vec<S, 4>& x, const GeometryConfig& cfg, Sheet sheet = Sheet::positive_w) {
  const Vec<S, 4> xi = chart_coordinate(x, cfg);
  const S q = cfg.b + eta_xx(xi);
  if (!(cfg.sheet_sign() * value_of(q) > 0.0))
    throw DomainError("embed: b + eta(x,x) has the wrong sign for this branch");
  using std::sqrt;
  S w = 1.0 / sqrt(cfg.sheet_sign() * q);
  if (sheet == Sheet::negative_w) w = -w;
  return {w * xi[0], w * xi[1], w * xi[2], w * xi[3], w};
}

// Inverse of embed: divide by W and restore the length scale.
inline Point4 project(const AmbientPoint5& X, const GeometryConfig& cfg) {
  if (X[4] == 0.0) throw DomainError("project: W = 0 is not covered by the chart");
  Point4 x;
  for (int k = 0; k < 4; ++k) x[k] = cfg.l1 * X[k] / X[4];
  return x;
}

// Left side minus right side of the hypersurface constraint.
inline double hypersurface_residual(const AmbientPoint5& X, const GeometryConfig& cfg) {
  return -X[0] * X[0] + X[1] * X[1] + X[2] * X[2] + X[3] * X[3] + cfg.b * X[4] * X[4] -
         cfg.sheet_sign();
}

// Rescales W so that the constraint reads eta5(X, X) = +-1 with
// eta5 = diag(-1, 1, 1, 1, +-1); the isometry groups act linearly here.
inline AmbientPoint5 to_unit_form(AmbientPoint5 X, const GeometryConfig& cfg) {
  X[4] *= std::sqrt(std::abs(cfg.b));
  return X;
}
inline AmbientPoint5 from_unit_form(AmbientPoint5 X, const GeometryConfig& cfg) {
  X[4] /= std::sqrt(std::abs(cfg.b));
  return X;
}

// The metric preserved by the isometry group of the branch, in unit-form
// coordinates: diag(-1,1,1,1,1) for dS, diag(-1,1,1,1,-1) for AdS.
inline Mat5 branch_metric(Branch branch) { return eta5(branch == Branch::dS ? 1.0 : -1.0); }

/// dX^A / dx^mu at x, by forward-mode differentiation of embed.
inline Mat<double, 5, 4> embedding_jacobian(const Point4& x, const GeometryConfig& cfg,
                                            Sheet sheet = Sheet::positive_w) {
  using D = Dual<double, 4>;
  Vec<D, 4> xd;
  for (int k = 0; k < 4; ++k) xd[k] = D::variable(x[k], k);
  const Vec<D, 5> X = embed(xd, cfg, sheet);
  Mat<double, 5, 4> J;
  for (int A = 0; A < 5; ++A)
    for (int m = 0; m < 4; ++m) J(A, m) = X[A].d[m];
  return J;
}

/// (dX^A/dx^mu)(dX^B/dx^nu) S_AB for a constant ambient 5x5 tensor S.
/// Works for symmetric and antisymmetric S alike.
inline QuadForm4 pullback_form(const Mat5& ambient, const Point4& x, const GeometryConfig& cfg,
                               Sheet sheet = Sheet::positive_w) {
  require_chart(x, cfg, "pullback_form");
  const auto J = embedding_jacobian(x, cfg, sheet);
  return transpose(J) * ambient * J;
}

/// (dX^A/dx^mu) w_A for a constant ambient covector w.
inline OneForm4 pullback_one_form(const Vec<double, 5>& covector, const Point4& x,
                                  const GeometryConfig& cfg, Sheet sheet = Sheet::positive_w) {
  require_chart(x, cfg, "pullback_one_form");
  const auto J = embedding_jacobian(x, cfg, sheet);
  return transpose(J) * covector;
}

// The induced metric in closed form (length scale 1):
//   g = b eta / q - b (eta x)(eta x)^T / q^2,  q = b + eta(x,x)    (dS)
//   g = b eta / q' + b (eta x)(eta x)^T / q'^2, q' = b - eta(x,x) (AdS, b > 0)
// The AdS form is written with the positive hypersurface parameter b_h.
inline QuadForm4 induced_metric_closed_form(const Point4& x, double b_h, Branch branch) {
  const double s = eta_xx(x);
  const Point4 u = lower(x);
  const double q = branch == Branch::dS ? b_h + s : b_h - s;
  const double sign = branch == Branch::dS ? -1.0 : 1.0;
  QuadForm4 g;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      g(m, n) = (m == n ? b_h * eta_diag(m) / q : 0.0) + sign * b_h * u[m] * u[n] / (q * q);
  return g;
}

}  // namespace tpd
