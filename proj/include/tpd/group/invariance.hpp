#pragma once

// Invariance of induced structures under sampled subgroup maps.
//
// Ambient tensors are pulled back as they stand (no index lowering) and the
// group acts by Y' = M Y. A covariant ambient tensor S is then preserved by
// exp(X) iff X^T S + S X = 0. The displayed C, D and V satisfy the
// contravariant condition under the + generators, so their pullbacks are
// preserved by the eta-conjugate (-) subgroups; eta S eta is preserved by the
// + subgroups.

#include <cmath>
#include <cstdint>
#include <functional>

#include "tpd/dynamics/lagrangian.hpp"
#include "tpd/geometry/densities.hpp"
#include "tpd/geometry/induced.hpp"
#include "tpd/group/group.hpp"
#include "tpd/lie/tables.hpp"

namespace tpd {

inline std::vector<Mat5> double_generators(const SubalgebraSpec& spec, Branch branch = Branch::dS) {
  std::vector<Mat5> out;
  for (const auto& m : generator_matrices(spec, branch)) out.push_back(to_double(m));
  return out;
}

inline GroupElement sample_subgroup_element(std::uint64_t seed, double scale, const SubalgebraSpec& spec,
                                            Branch branch = Branch::dS) {
  return sample_from(seed, scale, double_generators(spec, branch), branch);
}

enum class DensityKind { yang_mills, born_infeld };

inline std::string to_string(DensityKind k) { return k == DensityKind::yang_mills ? "yang_mills" : "born_infeld"; }

// A two-form field on the unit de Sitter chart.
using TwoFormField = std::function<TwoForm4(const Point4&)>;

inline TwoFormField displayed_D(const FormParams& p) {
  return [p](const Point4& x) { return induced_D(x, p); };
}

inline TwoFormField lowered_D(const FormParams& p) {
  const Mat5 e = eta5();
  const Mat5 S = e * ambient_D(p) * e;
  return [S](const Point4& x) { return pullback_form(S, x, unit_de_sitter()); };
}

inline double density_of(DensityKind k, const TwoFormField& D, const Point4& x) {
  const QuadForm4 B = metric_B(x, unit_de_sitter());
  const QuadForm4 Bi = inverse(B);
  if (k == DensityKind::yang_mills) return ym_contraction(D(x), Bi) * std::sqrt(std::abs(det(B)));
  return bi_value(B, D(x), Bi);
}

/// density(x') |det dx'/dx| - density(x) on the unit de Sitter chart.
inline double density_invariance_residual(const GroupElement& g, const Point4& x, DensityKind k,
                                          const TwoFormField& D) {
  const auto& cfg = unit_de_sitter();
  const Point4 xp = flt_apply(g, x, cfg);
  const double jac = std::abs(det(flt_jacobian(g, x, cfg)));
  return density_of(k, D, xp) * jac - density_of(k, D, x);
}

/// Max entry of C(x') J J - C(x) for a tensor field C.
inline double form_invariance_residual(const GroupElement& g, const Point4& x,
                                       const std::function<Mat4(const Point4&)>& field) {
  const auto& cfg = unit_de_sitter();
  const Point4 xp = flt_apply(g, x, cfg);
  const Mat4 J = flt_jacobian(g, x, cfg);
  return max_abs(transpose(J) * field(xp) * J - field(x));
}

/// L_F(x', J xdot) - L_F(x, xdot) for the Finsler Lagrangian.
inline double finsler_invariance_residual(const GroupElement& g, const KinState& s, double delta, double a,
                                          VForm form) {
  const auto& cfg = unit_de_sitter();
  const Point4 x = event_of(s);
  const Point4 xdot{1.0, s.v[0], s.v[1], s.v[2]};
  const Point4 xp = flt_apply(g, x, cfg);
  const Point4 xdotp = flt_jacobian(g, x, cfg) * xdot;
  return finsler_lagrangian4(xp, xdotp, delta, a, form) - finsler_lagrangian4(x, xdot, delta, a, form);
}

}  // namespace tpd
