#pragma once

// Yang-Mills and Born-Infeld type Lagrangians built from B and the induced
// two-form D on the b = 1 de Sitter chart.

#include <cmath>

#include "tpd/geometry/induced.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

// D_mn D_ab B^ma B^nb.
inline double ym_contraction(const TwoForm4& D, const QuadForm4& B_inv) {
  // (B^-1 D B^-1)^{mn} = B^ma D_ab B^bn
  const QuadForm4 raised = B_inv * D * B_inv;
  double s = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) s += D(m, n) * raised(m, n);
  return s;
}

// sqrt|det(B - D B^-1 D)|.
inline double bi_value(const QuadForm4& B, const TwoForm4& D, const QuadForm4& B_inv) {
  return std::sqrt(std::abs(det(B - D * B_inv * D)));
}

/// The scalar D_mn D_ab B^ma B^nb for the induced two-form.
inline double ym_scalar(const Point4& x, const FormParams& p, const GeometryConfig& cfg = unit_de_sitter()) {
  return ym_contraction(induced_D(x, p), inverse_B(x, cfg));
}

/// ym_scalar weighted by sqrt|det B|, a density of weight one.
inline double ym_density(const Point4& x, const FormParams& p, const GeometryConfig& cfg = unit_de_sitter()) {
  const QuadForm4 B = metric_B(x, cfg);
  return ym_contraction(induced_D(x, p), inverse(B)) * std::sqrt(std::abs(det(B)));
}

/// sqrt|det(B - D B^-1 D)|, a density of weight one.
inline double bi_density(const Point4& x, const FormParams& p, const GeometryConfig& cfg = unit_de_sitter()) {
  const QuadForm4 B = metric_B(x, cfg);
  return bi_value(B, induced_D(x, p), inverse(B));
}

}  // namespace tpd
