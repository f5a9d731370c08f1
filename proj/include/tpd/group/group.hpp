#pragma once

// Isometry groups O(1,4) / O(2,3) acting linearly on unit-form ambient
// coordinates Y = (T, X, Y, Z, sqrt|b| W), and by fractional linear maps on
// the chart:
//   x' = l1 c (M (xi, c))_mu / (M (xi, c))_4,   xi = x / l1,  c = sqrt|b|.
// At b = 1 this is the printed map; for other b the printed one misses the
// overall factor c (see flt_printed).

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tpd/core/dual.hpp"
#include "tpd/core/errors.hpp"
#include "tpd/core/matrix.hpp"
#include "tpd/core/random.hpp"
#include "tpd/geometry/embedding.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

struct GroupElement {
  Mat5 M = Mat5::identity();
  Branch branch = Branch::dS;
};

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.branch != h.branch) throw InvalidInput("GroupElement: branches differ");
  return {g.M * h.M, g.branch};
}

inline double branch_sign(Branch b) { return b == Branch::dS ? 1.0 : -1.0; }

// (M_AB)^C_D = delta_A^C eta_BD - delta_B^C eta_AD in double precision.
inline Mat5 algebra_basis(int A, int B, Branch branch = Branch::dS) {
  const Mat5 eta = branch_metric(branch);
  Mat5 m = Mat5::zero();
  for (int D = 0; D < 5; ++D) {
    m(A, D) += eta(B, D);
    m(B, D) -= eta(A, D);
  }
  return m;
}

inline std::vector<Mat5> full_algebra_basis(Branch branch = Branch::dS) {
  std::vector<Mat5> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) out.push_back(algebra_basis(a, b, branch));
  return out;
}

/// exp(sum c_k X_k) with c_k uniform in [-scale, scale], deterministic per seed.
inline GroupElement sample_from(std::uint64_t seed, double scale, const std::vector<Mat5>& generators,
                                Branch branch) {
  if (!(scale >= 0.0)) throw InvalidInput("sample_group_element: scale must be nonnegative");
  Rng rng(seed);
  Mat5 A = Mat5::zero();
  for (const auto& x : generators) A += rng.uniform(-scale, scale) * x;
  return {matexp(A), branch};
}

inline GroupElement sample_group_element(std::uint64_t seed, double scale, Branch branch = Branch::dS) {
  return sample_from(seed, scale, full_algebra_basis(branch), branch);
}

/// exp(sum c_k X_k) for explicit coefficients.
inline GroupElement exp_element(const std::vector<std::pair<Mat5, double>>& terms, Branch branch = Branch::dS) {
  Mat5 A = Mat5::zero();
  for (const auto& [x, c] : terms) A += c * x;
  return {matexp(A), branch};
}

/// max |M^T eta M - eta|.
inline double defining_residual(const GroupElement& g) {
  const Mat5 eta = branch_metric(g.branch);
  return max_abs(transpose(g.M) * eta * g.M - eta);
}

// lambda [[N, P], [-+ P^T eta N / s, s]],  s = sqrt(1 -+ eta(P, P)).
struct BlockDecomposition {
  Mat4 N;
  Point4 P;
  int lambda = 1;
  double s = 1.0;
  double eq11_residual = 0.0;
  double reassembly_residual = 0.0;
};

inline Mat5 assemble(const Mat4& N, const Point4& P, int lambda, Branch branch) {
  const double eps = branch_sign(branch);
  const Mat4 eta = eta4();
  const double s = std::sqrt(1.0 - eps * dot(P, eta * P));
  const Point4 row = transpose(N) * (eta * P);
  Mat5 M;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) M(i, j) = lambda * N(i, j);
    M(i, 4) = lambda * P[i];
    M(4, i) = -lambda * eps * row[i] / s;
  }
  M(4, 4) = lambda * s;
  return M;
}

/// Splits M into (N, P, lambda) and measures the constraint
///   N^T eta N = eta + N^T eta P P^T eta N / (-+1 + eta(P, P)).
inline BlockDecomposition decompose(const GroupElement& g) {
  const double eps = branch_sign(g.branch);
  const double corner = g.M(4, 4);
  if (std::abs(corner) < 1e-12) throw DomainError("decompose: lower-right entry vanishes");
  BlockDecomposition d;
  d.lambda = corner > 0 ? 1 : -1;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) d.N(i, j) = d.lambda * g.M(i, j);
    d.P[i] = d.lambda * g.M(i, 4);
  }
  const Mat4 eta = eta4();
  const double pp = dot(d.P, eta * d.P);
  if (!(1.0 - eps * pp > 0.0)) throw DomainError("decompose: 1 -+ eta(P, P) must be positive");
  d.s = std::sqrt(1.0 - eps * pp);
  const Point4 u = transpose(d.N) * (eta * d.P);
  Mat4 rhs = eta;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rhs(i, j) += u[i] * u[j] / (-eps + pp);
  d.eq11_residual = max_abs(transpose(d.N) * eta * d.N - rhs);
  d.reassembly_residual = max_abs(assemble(d.N, d.P, d.lambda, g.branch) - g.M);
  return d;
}

/// Fractional linear image of x; generic so that duals can differentiate it.
template <class S>
Vec<S, 4> flt_generic(const GroupElement& g, const Vec<S, 4>& x, const GeometryConfig& cfg) {
  require_chart(x, cfg, "flt_apply");
  const double c = std::sqrt(std::abs(cfg.b));
  const Vec<S, 4> xi = chart_coordinate(x, cfg);
  Vec<S, 5> Y{xi[0], xi[1], xi[2], xi[3], S(c)};
  Vec<S, 5> Yp;
  for (int i = 0; i < 5; ++i) {
    Yp[i] = S(0.0);
    for (int j = 0; j < 5; ++j) Yp[i] += g.M(i, j) * Y[j];
  }
  const double den = value_of(Yp[4]);
  if (!(den > 1e-12)) throw ChartEscape("flt_apply: image leaves the W > 0 half chart", den);
  Vec<S, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = (cfg.l1 * c) * Yp[i] / Yp[4];
  if (!in_chart(Point4{value_of(out[0]), value_of(out[1]), value_of(out[2]), value_of(out[3])}, cfg))
    throw ChartEscape("flt_apply: image outside the chart domain", den);
  return out;
}

inline Point4 flt_apply(const GroupElement& g, const Point4& x, const GeometryConfig& cfg) {
  return flt_generic(g, x, cfg);
}

/// embed, multiply by M in unit form, project.
inline Point4 flt_projective(const GroupElement& g, const Point4& x, const GeometryConfig& cfg) {
  const AmbientPoint5 Y = to_unit_form(embed(x, cfg), cfg);
  return project(from_unit_form(g.M * Y, cfg), cfg);
}

/// The printed form (N xi + sqrt b P) / (-+ P^T eta N xi / s + sqrt b s), times l1.
inline Point4 flt_printed(const GroupElement& g, const Point4& x, const GeometryConfig& cfg) {
  require_chart(x, cfg, "flt_printed");
  const double eps = branch_sign(g.branch);
  const auto d = decompose(g);
  const double c = std::sqrt(std::abs(cfg.b));
  const Point4 xi = chart_coordinate(x, cfg);
  const Point4 Nx = d.N * xi;
  const double den = -eps * dot(d.P, eta4() * Nx) / d.s + c * d.s;
  if (std::abs(den) < 1e-12) throw ChartEscape("flt_printed: vanishing denominator", den);
  Point4 out;
  for (int i = 0; i < 4; ++i) out[i] = cfg.l1 * (Nx[i] + c * d.P[i]) / den;
  return out;
}

/// dx'^a / dx^m.
inline Mat4 flt_jacobian(const GroupElement& g, const Point4& x, const GeometryConfig& cfg) {
  using D = Dual<double, 4>;
  Vec<D, 4> xd;
  for (int k = 0; k < 4; ++k) xd[k] = D::variable(x[k], k);
  const auto y = flt_generic(g, xd, cfg);
  Mat4 J;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m) J(a, m) = y[a].d[m];
  return J;
}

/// B(x') J J - B(x).
inline Mat4 verify_B_invariance(const GroupElement& g, const Point4& x, const GeometryConfig& cfg) {
  const Point4 xp = flt_apply(g, x, cfg);
  const Mat4 J = flt_jacobian(g, x, cfg);
  return transpose(J) * metric_B(xp, cfg) * J - metric_B(x, cfg);
}

/// A group element whose last column is (P, s) and whose upper-left block
/// tends to N as P -> 0: R(u) diag(N, 1), with R the product of the
/// reflections in u + e4 and in u, u = (P, s).
inline GroupElement translation_element(const Mat4& N, const Point4& P, Branch branch = Branch::dS) {
  const double eps = branch_sign(branch);
  const Mat5 eta = branch_metric(branch);
  const double pp = dot(P, eta4() * P);
  if (!(1.0 - eps * pp > 0.0)) throw DomainError("translation_element: translation too large");
  const double s = std::sqrt(1.0 - eps * pp);
  const Vec<double, 5> u{P[0], P[1], P[2], P[3], s};
  Vec<double, 5> w = u;
  w[4] += 1.0;
  const Vec<double, 5> w_low = eta * w;
  const Vec<double, 5> e4_low = eta * Vec<double, 5>{0, 0, 0, 0, 1};
  Mat5 R = Mat5::identity();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) R(i, j) += -eps * w[i] * w_low[j] / (1.0 + s) + 2.0 * eps * u[i] * e4_low[j];
  Mat5 L = Mat5::identity();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) L(i, j) = N(i, j);
  return {R * L, branch};
}

struct PoincareReport {
  std::vector<double> l1;
  std::vector<double> error;
  double fitted_rate = 0.0;  // -(slope of log error against log l1)
  bool exact = false;        // every error below 1e-14
};

/// |l1 flt(x / l1) - (N x + sqrt b p)| along growing l1, with translations P = p / l1.
inline PoincareReport poincare_limit_check(const Mat4& N, const Point4& p, const std::vector<double>& l1_sequence,
                                           const Point4& x = {0.3, -0.2, 0.5, 0.1}, double b = 1.0) {
  if (l1_sequence.size() < 2) throw InvalidInput("poincare_limit_check: need at least two l1 values");
  const double c = std::sqrt(b);
  PoincareReport rep;
  const Point4 target = [&] {
    Point4 t = N * x;
    for (int i = 0; i < 4; ++i) t[i] += c * p[i];
    return t;
  }();
  for (double l1 : l1_sequence) {
    const GeometryConfig cfg{1.0, b, l1, Branch::dS};
    Point4 P;
    for (int i = 0; i < 4; ++i) P[i] = p[i] / l1;
    const Point4 y = flt_apply(translation_element(N, P), x, cfg);
    double e = 0.0;
    for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(y[i] - target[i]));
    rep.l1.push_back(l1);
    rep.error.push_back(e);
  }
  rep.exact = true;
  for (double e : rep.error) rep.exact = rep.exact && e < 1e-14;
  if (!rep.exact) {
    // least squares slope of log e against log l1 over nonzero errors
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t k = 0; k < rep.l1.size(); ++k) {
      if (rep.error[k] <= 0.0) continue;
      const double lx = std::log(rep.l1[k]), ly = std::log(rep.error[k]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++n;
    }
    if (n >= 2) rep.fitted_rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return rep;
}

// exp of a boost generator M_0i with rapidity r, as a 4x4 Lorentz block.
inline Mat4 lorentz_boost(int axis, double rapidity) {
  Mat4 N = Mat4::identity();
  N(0, 0) = N(axis, axis) = std::cosh(rapidity);
  N(0, axis) = N(axis, 0) = std::sinh(rapidity);
  return N;
}

}  // namespace tpd
