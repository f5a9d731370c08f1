// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed here.
//
//   acceptance [--expect-fail 3,4]
//
// Without --expect-fail the exit status is 0 iff every criterion passes.
// With it, the exit status is 0 iff the failing criteria are exactly the
// listed ones, so a criterion that starts passing (or a new failure) is
// reported as a change.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpd/cli/suites.hpp"

using namespace tpd;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;  // 0 for none
  std::function<Outcome()> run;
};

std::string g6(double x) { return suites::fmt(x); }

const GeometryConfig kUnit{1.0, 1.0, 1.0, Branch::dS};
const GeometryConfig kUnitAdS{-1.0, -1.0, 1.0, Branch::AdS};

Outcome inertia() {
  Rng rng(101);
  double el = 0.0, straight = 0.0;
  for (int i = 0; i < 1000; ++i) el = std::max(el, max_abs(el_residual(random_timelike_state(rng, kUnit), kUnit)));
  int done = 0;
  while (done < 1000) {
    const KinState s = random_timelike_state(rng, kUnit);
    bool inside = true;
    for (int k = 0; k <= 10 && inside; ++k) {
      const double dt = 0.05 * k;
      const Point4 y{s.t + dt, s.x[0] + s.v[0] * dt, s.x[1] + s.v[1] * dt, s.x[2] + s.v[2] * dt};
      inside = in_chart(y, kUnit) && 1.0 + eta_xx(y) > 0.1;
    }
    if (!inside) continue;
    straight = std::max(straight, integrate_free_motion(s, s.t + 0.5, 0.025, kUnit).max_straightness_error());
    ++done;
  }
  return {el < 1e-6 && straight < 1e-6, "max |EL| " + g6(el) + ", max straightness error " + g6(straight)};
}

Outcome pde_system() {
  Rng rng(102);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) worst = std::max(worst, pde_residuals(random_chart_point(rng, kUnit), kUnit).max_abs());
  return {worst < 1e-10, "max residual " + g6(worst)};
}

Outcome hessian_limit() {
  Rng rng(103);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GeometryConfig g{rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0), 1.0, Branch::dS};
    Vec3 v;
    do v = {rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9)};
    while (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] > 0.81);
    const double vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    const double d = hessian_vv(KinState{0, {0, 0, 0}, v}, g).det;
    const double q = hessian_det_quoted(g.a, g.b, vv);
    worst = std::max(worst, std::abs(d - q) / std::abs(q));
  }
  const double at0 = hessian_vv(KinState{0, {0, 0, 0}, {0, 0, 0}}, kUnit).det;
  const double s = 0.5;
  const double at75 = hessian_vv(KinState{0, {0, 0, 0}, {s, s, s}}, kUnit).det;
  return {worst < 1e-9 && std::abs(at0 + 1) < 1e-9 && std::abs(at75 + 8) < 1e-9,
          "max relative deviation from the quoted form " + g6(worst) + "; det at v = 0: " + g6(at0) +
              ", at v.v = 0.75: " + g6(at75) + " (quoted -8)"};
}

Outcome induced_metric() {
  Rng rng(104);
  double pull = 0.0;
  for (const auto& g : {kUnit, kUnitAdS}) {
    const Point4 o{0, 0, 0, 0};
    const double k = metric_B(o, g)(2, 2) / pullback_form(ambient_form(g), o, g)(2, 2);
    for (int i = 0; i < 1000; ++i) {
      const Point4 x = random_chart_point(rng, g, 0.5);
      pull = std::max(pull, max_abs(metric_B(x, g) - k * pullback_form(ambient_form(g), x, g)));
    }
  }
  double printed = 0.0, corrected = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Point4 x = random_chart_point(rng, kUnit);
    const QuadForm4 num = inverse_B(x, kUnit);
    printed = std::max(printed, max_abs(inverse_B_printed(x) - num));
    corrected = std::max(corrected, max_abs(inverse_B_closed_form(x, kUnit) - num) / std::max(1.0, max_abs(num)));
  }
  return {pull < 1e-10 && printed < 1e-12,
          "pullback " + g6(pull) + "; printed inverse " + g6(printed) + " (corrected closed form " + g6(corrected) + ")"};
}

Outcome signature() {
  Rng rng(105);
  double worst = 0.0;
  int wrong = 0;
  for (const auto& g : {kUnit, kUnitAdS})
    for (int i = 0; i < 10000; ++i) {
      const Point4 x = random_chart_point(rng, g);
      const auto m = signature_minors(x, g);
      const auto e = signature_minors_closed_form(x, g);
      wrong += !(m.b00 < 0 && m.minor1 > 0 && m.minor2 > 0 && m.minor3 > 0);
      for (auto [u, v] : {std::pair{m.b00, e.b00}, {m.minor1, e.minor1}, {m.minor2, e.minor2}, {m.minor3, e.minor3}})
        worst = std::max(worst, std::abs(u - v) / std::abs(v));
    }
  return {wrong == 0 && worst < 1e-10, std::to_string(wrong) + " wrong signatures, max relative minor error " + g6(worst)};
}

Outcome group_action() {
  double rel = 0.0, proj = 0.0, binv = 0.0, dec = 0.0;
  for (Branch br : {Branch::dS, Branch::AdS})
    for (std::uint64_t k = 0; k < 100; ++k) {
      const auto el = sample_group_element(600 + k, 0.6, br);
      rel = std::max(rel, defining_residual(el));
      const auto d = decompose(el);
      dec = std::max({dec, d.eq11_residual, d.reassembly_residual});
    }
  for (const auto& g : {kUnit, kUnitAdS}) {
    suites::for_valid_pairs(
        100, 611, g, [&](std::uint64_t s) { return sample_group_element(s, 0.6, g.branch); },
        [&](const GroupElement& el, const Point4& x) {
          const Point4 a = flt_apply(el, x, g), b = flt_projective(el, x, g);
          for (int i = 0; i < 4; ++i) proj = std::max(proj, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(a[i])));
        });
    suites::for_valid_pairs(
        100, 612, g, [&](std::uint64_t s) { return sample_group_element(s, 0.5, g.branch); },
        [&](const GroupElement& el, const Point4& x) { binv = std::max(binv, max_abs(verify_B_invariance(el, x, g))); });
  }
  const auto r1 = poincare_limit_check(lorentz_boost(3, -0.5), Point4{0.4, -0.3, 0.7, 0.2}, {10, 30, 100, 300, 1000});
  const auto r2 = poincare_limit_check(lorentz_boost(1, 0.2), Point4{0.1, 0.5, 0, -0.2}, {10, 100, 1000},
                                       Point4{0.2, 0.1, 0.1, 0.3}, 2.0);
  const double rate = std::min(r1.fitted_rate, r2.fitted_rate);
  return {rel < 1e-9 && proj < 1e-9 && binv < 1e-6 && dec < 1e-9 && rate >= 1.9,
          "M^T eta M " + g6(rel) + ", projective " + g6(proj) + ", B-invariance " + g6(binv) + ", decomposition " +
              g6(dec) + ", contraction rate " + g6(rate)};
}

Outcome lie_tables() {
  std::size_t fails = 0, relations = 0;
  std::string multipliers;
  for (const char* type : {"TypeI", "TypeII"})
    for (int s : {1, -1}) {
      const auto rep = verify_bracket_table(type, s);
      relations += rep.checks.size();
      fails += rep.count(RelationStatus::fail);
      for (const auto& ch : rep.checks)
        if (ch.status == RelationStatus::flagged)
          multipliers += " [" + ch.relation.lhs + "," + ch.relation.rhs + "] *" + ch.multiplier;
    }
  for (const auto& cmp : compare_printed_generators())
    if (cmp.name == "P+" && cmp.multiplier) multipliers += " P+ printed *" + cmp.multiplier->str();
  const auto [pairs, bad] = bracket_display_mismatches();
  const auto ops = operator_correspondence(3);
  return {fails == 0 && pairs == 45 && bad == 0 && ops.mismatches == 0,
          std::to_string(relations) + " table relations, " + std::to_string(fails) + " failing; " +
              std::to_string(pairs) + " display pairs, " + std::to_string(bad) + " mismatches; operators " +
              std::to_string(ops.mismatches) + " mismatches; multipliers:" + multipliers};
}

Outcome invariant_tensors() {
  const SubalgebraSpec ex1{"ex1", 1, {"K2+", "K3+", "P+", "T"}};
  const auto vec = invariant_space(subalgebra("K1", 1), Species::vector, Convention::vector);
  const auto sym = invariant_space(ex1, Species::symmetric2, Convention::contravariant);
  const auto anti = invariant_space(subalgebra("H1", 1), Species::antisymmetric2, Convention::contravariant);
  bool ok = vec.dimension() == 1 && sym.dimension() == 2 && anti.dimension() == 3;
  Rng rng(108);
  int missing = 0;
  auto q = [&] { return QSqrt2(Rational(rng.integer(-9, 9), rng.integer(1, 5))); };
  for (int i = 0; i < 20; ++i) {
    missing += !in_span(sym, exact_C(q(), q()));
    missing += !in_span(anti, exact_D(q(), q(), q()));
    missing += !in_span(vec, exact_V(q()));
  }
  const bool eta = exact_C(QSqrt2(-1), QSqrt2(0)) == algebra_metric();
  int rel = 0;
  for (const auto& r : direction_relations({"K2+", "K3+", "J2", "J3", "T", "P+", "R"}, exact_W(QSqrt2(1))))
    rel += !(r.eigenvalue && *r.eigenvalue == QSqrt2(r.generator == "R" ? 1 : 0));
  for (const auto& r : direction_relations({"F1+", "F2+", "F3+", "L1", "L2", "L3", "J0"}, exact_V(QSqrt2(1))))
    rel += !(r.eigenvalue && *r.eigenvalue == QSqrt2(r.generator == "J0" ? -1 : 0));
  ok = ok && missing == 0 && eta && rel == 0;
  return {ok, "dimensions " + std::to_string(vec.dimension()) + "/" + std::to_string(sym.dimension()) + "/" +
                  std::to_string(anti.dimension()) + ", " + std::to_string(missing) + " printed tensors outside the span, eta " +
                  (eta ? "recovered" : "not recovered") + ", " + std::to_string(rel) + " relation failures"};
}

Outcome modes() {
  const auto grid = uniform_grid(-5, 5, 1001);
  double exact = 0.0;
  for (double kk : {1.5, 2.0, 5.0, 10.0})
    for (int sign : {1, -1})
      for (double x : grid) exact = std::max(exact, exact_massless_residual(kk, sign, x));
  double ode = 0.0;
  for (double kk : {2.0, 5.0}) {
    const ModeParams p{0.0, 0.0, kk, 1, true};
    const auto s = solve_mode_ode(p, exact_massless(kk, 1, -5), exact_massless_derivative(kk, 1, -5), -5, 5, 0.01);
    for (std::size_t i = 0; i < s.size(); ++i) ode = std::max(ode, std::abs(s.chi[i] - exact_massless(kk, 1, s.x[i])));
  }
  Rng rng(109);
  double w0 = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ModeParams p{rng.uniform(0.5, 3), rng.uniform(-0.5, 0.5), rng.uniform(1.01, 20), 1, true};
    const double x = rng.uniform(-5, 5);
    w0 = std::max(w0, std::abs(wkb_w0_printed(p, x) - wkb_w0(p, x)) / wkb_w0(p, x));
  }
  const ModeParams p{0.0, 0.0, 2.0, 1, true};
  double fixed = 0.0;
  for (double w : wkb_iterate(wkb_initial(p, -5, 5, 1001), p).w) fixed = std::max(fixed, std::abs(w - 1.0));
  return {exact < 1e-10 && ode < 1e-6 && w0 < 1e-12 && fixed < 1e-9,
          "exact residual " + g6(exact) + ", ODE vs exact " + g6(ode) + ", w0 forms " + g6(w0) + ", fixed point " + g6(fixed)};
}

Outcome unruh() {
  double worst = 0.0;
  for (int k = -40; k <= 40; ++k) {
    const double w = 0.25 * k;
    const cplx f = fourier_oracle(w);
    worst = std::max({worst, std::abs(f.real() - fourier_closed_form(w)), std::abs(f.imag())});
  }
  const double zero = fourier_oracle(0.0).real();
  const bool half_pi = std::abs(zero - std::numbers::pi / 2) < 1e-8;
  int violations = 0;
  for (double kk : {1.5, 2.0, 5.0, 10.0}) {
    double prev = INFINITY;
    for (int i = 0; i <= 170; ++i) {
      const double a = unruh_amplitude(3.0 + 0.1 * i, kk);
      violations += !(a < prev && a > 0);
      prev = a;
    }
    violations += !(prev < 1e-6);
  }
  return {worst < 1e-8 && half_pi && violations == 0,
          "Fourier error " + g6(worst) + "; omega = 0 gives " + g6(zero) +
              " = pi/2 (flagged: the text quotes pi); monotonicity violations " + std::to_string(violations)};
}

Outcome exterior() {
  Rng rng(111);
  double du = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Point4 x = random_chart_point(rng, kUnit, 0.7);
    const FormParams p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    du = std::max(du, max_abs(suites::exterior_derivative([&](const Point4& y) { return induced_U(y, p); }, x) -
                              induced_D(x, p)));
  }
  double dens = 0.0;
  const auto spec = subalgebra("H1", -1);
  for (DensityKind k : {DensityKind::yang_mills, DensityKind::born_infeld})
    suites::for_valid_pairs(
        100, 112 + static_cast<int>(k), kUnit, [&](std::uint64_t s) { return sample_subgroup_element(s, 0.5, spec); },
        [&](const GroupElement& el, const Point4& x) {
          const FormParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
          dens = std::max(dens, std::abs(density_invariance_residual(el, x, k, displayed_D(p))));
        });
  return {du < 1e-6 && dens < 1e-6, "dU - D " + g6(du) + ", density invariance " + g6(dens)};
}

Outcome short_distance() {
  double worst = 0.0;
  const int side = 32;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      worst = std::max(worst, std::abs(action_shortdist_check(-0.9 + 1.8 * i / (side - 1), 0.95 * j / (side - 1))));
  return {worst < 1e-8, "max |S' - integrand| " + g6(worst) + " on 32 x 32"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expected;
  app.add_option("--expect-fail", expected, "criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "inertia", 10.0, inertia},
      {2, "pde_system", 0, pde_system},
      {3, "hessian_limit", 0, hessian_limit},
      {4, "induced_metric", 0, induced_metric},
      {5, "signature", 0, signature},
      {6, "group_action", 0, group_action},
      {7, "lie_tables", 0, lie_tables},
      {8, "invariant_tensors", 5.0, invariant_tensors},
      {9, "modes", 0, modes},
      {10, "unruh", 0, unruh},
      {11, "exterior_derivative", 0, exterior},
      {12, "short_distance_action", 0, short_distance},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += "; over the " + g6(c.time_limit_s) + " s limit";
    }
    if (!o.pass) failed.insert(c.number);
    std::printf("%-4s criterion %2d %-22s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());

  const std::set<int> want(expected.begin(), expected.end());
  if (app.count("--expect-fail")) {
    if (failed == want) return 0;
    std::printf("failing set differs from --expect-fail\n");
    return 1;
  }
  return failed.empty() ? 0 : 1;
}
