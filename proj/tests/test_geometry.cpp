#include <gtest/gtest.h>

#include <cmath>

#include "tpd/core/random.hpp"
#include "tpd/geometry/densities.hpp"
#include "tpd/geometry/embedding.hpp"
#include "tpd/geometry/induced.hpp"
#include "tpd/geometry/metric.hpp"

using namespace tpd;

namespace {

const GeometryConfig kUnit{1.0, 1.0, 1.0, Branch::dS};

Point4 random_ds_point(Rng& rng, const GeometryConfig& cfg, double box = 0.8) {
  for (;;) {
    Point4 x{rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box),
             rng.uniform(-box, box)};
    if (in_chart(x, cfg) && cfg.b + eta_xx(x) > 0.05) return x;
  }
}

// AdS chart points: b + x.x < 0 with b < 0.
Point4 random_ads_point(Rng& rng, const GeometryConfig& cfg) {
  const double radius = std::sqrt(-cfg.b);
  for (;;) {
    Point4 x{rng.uniform(-2.0, 2.0), rng.uniform(-radius, radius), rng.uniform(-radius, radius),
             rng.uniform(-radius, radius)};
    if (in_chart(x, cfg) && cfg.b + spatial_xx(x) < -0.05) return x;
  }
}

// Central-difference exterior derivative of a one-form field.
template <class F>
TwoForm4 exterior_derivative(F&& form, const Point4& x, double h = 1e-5) {
  Mat<double, 4> grad;  // grad(m, n) = d_m U_n
  for (int m = 0; m < 4; ++m) {
    Point4 xp = x, xm = x;
    xp[m] += h;
    xm[m] -= h;
    const OneForm4 up = form(xp), um = form(xm);
    for (int n = 0; n < 4; ++n) grad(m, n) = (up[n] - um[n]) / (2 * h);
  }
  return grad - transpose(grad);
}

}  // namespace

TEST(Config, Validation) {
  EXPECT_NO_THROW(kUnit.validate());
  EXPECT_THROW((GeometryConfig{-1.0, 1.0, 1.0, Branch::dS}.validate()), InvalidInput);
  EXPECT_THROW((GeometryConfig{1.0, 1.0, 1.0, Branch::AdS}.validate()), InvalidInput);
  EXPECT_THROW((GeometryConfig{1.0, 1.0, 0.0, Branch::dS}.validate()), InvalidInput);
  EXPECT_NO_THROW((GeometryConfig{-1.0, -2.0, 1.0, Branch::AdS}.validate()));
}

TEST(MetricB, OriginIsMinkowski) {
  EXPECT_EQ(metric_B(Point4{0, 0, 0, 0}, kUnit), eta4());
}

TEST(MetricB, TimeComponentMatchesClosedForm) {
  const Point4 x{0.5, 0.1, 0.0, 0.0};
  const double xx = 0.01;
  const double q = 1.0 - 0.25 + xx;
  EXPECT_NEAR(metric_B(x, kUnit)(0, 0), -(1.0 + xx) / (q * q), 1e-14);

  const GeometryConfig cfg{2.0, 3.0, 1.0, Branch::dS};
  const double q3 = 3.0 - 0.25 + xx;
  EXPECT_NEAR(metric_B(x, cfg)(0, 0), -2.0 * (3.0 + xx) / (q3 * q3), 1e-14);
}

TEST(MetricB, OutsideChartThrows) {
  EXPECT_THROW(metric_B(Point4{1.5, 0, 0, 0}, kUnit), DomainError);
  const GeometryConfig ads{-1.0, -1.0, 1.0, Branch::AdS};
  EXPECT_NO_THROW(metric_B(Point4{0, 0, 0, 0}, ads));
  EXPECT_NO_THROW(metric_B(Point4{3.0, 0.5, 0, 0}, ads));
  EXPECT_THROW(metric_B(Point4{0, 1.5, 0, 0}, ads), DomainError);
}

TEST(MetricB, IsConstantMultipleOfBranchPullback) {
  Rng rng(17);
  const GeometryConfig ds{1.7, 0.6, 1.0, Branch::dS};
  const GeometryConfig ads{-0.8, -1.3, 1.0, Branch::AdS};
  for (const auto& cfg : {ds, ads}) {
    const Point4 origin{0, 0, 0, 0};
    // Conformal constant fixed at one reference point.
    const double k = metric_B(origin, cfg)(2, 2) / pullback_form(ambient_form(cfg), origin, cfg)(2, 2);
    EXPECT_NEAR(k, cfg.branch == Branch::dS ? cfg.a : -cfg.a, 1e-12);
    for (int i = 0; i < 200; ++i) {
      const Point4 x = cfg.branch == Branch::dS ? random_ds_point(rng, cfg, 0.5) : random_ads_point(rng, cfg);
      const QuadForm4 diff = metric_B(x, cfg) - k * pullback_form(ambient_form(cfg), x, cfg);
      EXPECT_LT(max_abs(diff), 1e-10);
    }
  }
}

TEST(InverseB, ProductIsIdentityForGenericParameters) {
  Rng rng(23);
  const GeometryConfig cfg{0.7, 2.5, 1.0, Branch::dS};
  for (int i = 0; i < 100; ++i) {
    const Point4 x = random_ds_point(rng, cfg, 0.9);
    EXPECT_LT(max_abs(inverse_B(x, cfg) * metric_B(x, cfg) - Mat4::identity()), 1e-10);
    EXPECT_LT(max_abs(inverse_B_closed_form(x, cfg) - inverse_B(x, cfg)), 1e-10);
  }
  EXPECT_EQ(inverse_B(Point4{0, 0, 0, 0}, kUnit), eta4());
}

TEST(InverseB, PrintedFormDoesNotInvertB) {
  // (eta - x x^T) / (1 - t^2 + x.x) agrees at the origin only.
  EXPECT_LT(max_abs(inverse_B_printed(Point4{0, 0, 0, 0}) - eta4()), 1e-15);
  const Point4 x{0.3, 0.2, 0.1, 0.0};
  const QuadForm4 printed = inverse_B_printed(x);
  const QuadForm4 actual = inverse_B(x, kUnit);
  EXPECT_GT(max_abs(printed - actual), 0.1);
  // The correct closed form is (1 + eta(x,x)) (eta + x x^T).
  EXPECT_LT(max_abs(inverse_B_closed_form(x, kUnit) - actual), 1e-14);
}

TEST(SignatureMinors, Origin) {
  const auto m = signature_minors(Point4{0, 0, 0, 0}, kUnit);
  EXPECT_DOUBLE_EQ(m.b00, -1.0);
  EXPECT_DOUBLE_EQ(m.minor1, 1.0);
  EXPECT_DOUBLE_EQ(m.minor2, 1.0);
  EXPECT_DOUBLE_EQ(m.minor3, 1.0);
}

TEST(SignatureMinors, ThirdMinorAtSamplePoint) {
  const auto m = signature_minors(Point4{0.5, 0.1, 0, 0}, kUnit);
  EXPECT_NEAR(m.minor3, 1.0 / (0.76 * 0.76 * 0.76 * 1.01), 1e-12);
}

TEST(SignatureMinors, SweepMatchesClosedFormsAndSigns) {
  Rng rng(99);
  const GeometryConfig ds{1.3, 0.8, 1.0, Branch::dS};
  const GeometryConfig ads{-0.6, -1.1, 1.0, Branch::AdS};
  for (const auto& cfg : {ds, ads}) {
    for (int i = 0; i < 2000; ++i) {
      const Point4 x = cfg.branch == Branch::dS ? random_ds_point(rng, cfg) : random_ads_point(rng, cfg);
      const auto m = signature_minors(x, cfg);
      const auto c = signature_minors_closed_form(x, cfg);
      EXPECT_LT(m.b00, 0.0);
      EXPECT_GT(m.minor1, 0.0);
      EXPECT_GT(m.minor2, 0.0);
      EXPECT_GT(m.minor3, 0.0);
      EXPECT_NEAR(m.b00, c.b00, 1e-10 * std::abs(c.b00));
      EXPECT_NEAR(m.minor1, c.minor1, 1e-10 * std::abs(c.minor1));
      EXPECT_NEAR(m.minor2, c.minor2, 1e-10 * std::abs(c.minor2));
      EXPECT_NEAR(m.minor3, c.minor3, 1e-10 * std::abs(c.minor3));
    }
  }
}

TEST(Embed, OriginAndTimeAxis) {
  const auto X0 = embed(Point4{0, 0, 0, 0}, kUnit);
  EXPECT_EQ(X0, (AmbientPoint5{0, 0, 0, 0, 1}));
  const auto X = embed(Point4{0.5, 0, 0, 0}, kUnit);
  const double w = 1.0 / std::sqrt(0.75);
  EXPECT_NEAR(X[4], w, 1e-15);
  EXPECT_NEAR(X[0], 0.5 * w, 1e-15);
  EXPECT_NEAR(-X[0] * X[0] + X[4] * X[4], 1.0, 1e-14);
  const auto Xn = embed(Point4{0.5, 0, 0, 0}, kUnit, Sheet::negative_w);
  EXPECT_NEAR(Xn[4], -w, 1e-15);
}

TEST(Embed, RoundTripAndConstraint) {
  Rng rng(7);
  const GeometryConfig ds{1.0, 2.0, 1.0, Branch::dS};
  const GeometryConfig ads{-1.0, -0.5, 1.0, Branch::AdS};
  for (const auto& cfg : {ds, ads})
    for (int i = 0; i < 1000; ++i) {
      const Point4 x = cfg.branch == Branch::dS ? random_ds_point(rng, cfg) : random_ads_point(rng, cfg);
      const auto X = embed(x, cfg);
      EXPECT_LT(std::abs(hypersurface_residual(X, cfg)), 1e-12);
      const Point4 back = project(X, cfg);
      for (int k = 0; k < 4; ++k) EXPECT_NEAR(back[k], x[k], 1e-14);
    }
}

TEST(Embed, WrongSignRadicandThrows) {
  EXPECT_THROW(embed(Point4{2.0, 0, 0, 0}, kUnit), DomainError);
}

TEST(Pullback, MinkowskiAmbientGivesInducedMetric) {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Point4 x = random_ds_point(rng, kUnit);
    const auto g = induced_metric_closed_form(x, 1.0, Branch::dS);
    EXPECT_LT(max_abs(pullback_form(eta5(), x, kUnit) - g), 1e-10);
  }
  // AdS with hypersurface parameter 1 is the b = -1 chart.
  const GeometryConfig ads{-1.0, -1.0, 1.0, Branch::AdS};
  for (int i = 0; i < 200; ++i) {
    const Point4 x = random_ads_point(rng, ads);
    const auto g = induced_metric_closed_form(x, 1.0, Branch::AdS);
    EXPECT_LT(max_abs(pullback_form(eta5(-1.0), x, ads) - g), 1e-10);
  }
  EXPECT_LT(max_abs(pullback_form(eta5(), Point4{0, 0, 0, 0}, kUnit) - eta4()), 1e-15);
}

TEST(Pullback, Linearity) {
  Rng rng(9);
  const Mat5 s1 = ambient_C({0.3, 1.1, 0});
  const Mat5 s2 = ambient_D({0.2, -0.4, 0.9});
  for (int i = 0; i < 50; ++i) {
    const Point4 x = random_ds_point(rng, kUnit);
    const auto lhs = pullback_form(2.5 * s1 + (-1.5) * s2, x, kUnit);
    const auto rhs = 2.5 * pullback_form(s1, x, kUnit) + (-1.5) * pullback_form(s2, x, kUnit);
    EXPECT_LT(max_abs(lhs - rhs), 1e-12);
  }
}

TEST(Induced, CAtOrigin) {
  const FormParams p{0.4, 1.3, 0};
  const auto C = induced_C(Point4{0, 0, 0, 0}, p);
  EXPECT_NEAR(C(0, 0), p.a, 1e-15);
  EXPECT_NEAR(C(0, 1), p.b, 1e-15);
  EXPECT_NEAR(C(1, 1), 2 * p.b - p.a, 1e-15);
  EXPECT_NEAR(C(2, 2), p.b - p.a, 1e-15);
  EXPECT_NEAR(C(3, 3), p.b - p.a, 1e-15);
}

TEST(Induced, ClosedFormsAgreeWithPullbacks) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Point4 x = random_ds_point(rng, kUnit);
    const FormParams p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    EXPECT_LT(max_abs(induced_C(x, p) - pullback_form(ambient_C(p), x, kUnit)), 1e-8);
    EXPECT_LT(max_abs(induced_D(x, p) - pullback_form(ambient_D(p), x, kUnit)), 1e-8);
  }
}

TEST(Induced, DAtOrigin) {
  const FormParams p{0.5, -0.7, 1.2};
  const auto D = induced_D(Point4{0, 0, 0, 0}, p);
  EXPECT_EQ(D(0, 1), 0.0);
  EXPECT_EQ(D(0, 2), p.a);
  EXPECT_EQ(D(0, 3), p.b);
  EXPECT_EQ(D(1, 2), p.a);
  EXPECT_EQ(D(1, 3), p.b);
  EXPECT_EQ(D(2, 3), 0.0);
  EXPECT_EQ(D(2, 0), -p.a);
}

TEST(Induced, PotentialUHasFieldStrengthD) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Point4 x = random_ds_point(rng, kUnit, 0.7);
    const FormParams p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const auto dU = exterior_derivative([&](const Point4& y) { return induced_U(y, p); }, x);
    EXPECT_LT(max_abs(dU - induced_D(x, p)), 1e-6);
  }
}

TEST(Induced, PrintedPotentialIsNotAPotential) {
  const Point4 x{0.2, -0.1, 0.3, 0.25};
  const FormParams p{1.0, 0.5, -0.3};
  const auto dU = exterior_derivative([&](const Point4& y) { return induced_U_printed(y, p); }, x);
  EXPECT_GT(max_abs(dU - induced_D(x, p)), 1e-2);
}

TEST(Induced, OneFormsArePullbacksOfUnloweredVectors) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Point4 x = random_ds_point(rng, kUnit);
    const double a = rng.uniform(0.5, 2.0);
    const auto rv = relate_one_form(induced_V(x, a), ambient_V(a), x, 1e-10);
    ASSERT_TRUE(rv.raw_sign.has_value());
    EXPECT_EQ(*rv.raw_sign, 1.0);
    const auto rw = relate_one_form(induced_W(x, a), ambient_W(a), x, 1e-10);
    ASSERT_TRUE(rw.raw_sign.has_value());
    EXPECT_EQ(*rw.raw_sign, 1.0);
    if (std::abs(x[0]) > 0.05) {
      // eta5-lowered covectors are not related to the displayed forms by a sign.
      EXPECT_FALSE(rv.lowered_sign.has_value());
      EXPECT_FALSE(rw.lowered_sign.has_value());
    }
  }
}

TEST(Induced, DisplayedVAtOrigin) {
  EXPECT_EQ(induced_V(Point4{0, 0, 0, 0}, 1.5), (OneForm4{1.5, 0, 0, 0}));
  EXPECT_THROW(induced_V(Point4{1.2, 0, 0, 0}, 1.0), DomainError);
}

TEST(Densities, VanishingTwoForm) {
  const Point4 x{0.1, 0.2, -0.3, 0.05};
  EXPECT_EQ(ym_scalar(x, {}), 0.0);
  EXPECT_EQ(ym_density(x, {}), 0.0);
  EXPECT_NEAR(bi_density(x, {}), std::sqrt(std::abs(det(metric_B(x, kUnit)))), 1e-14);
}

TEST(Densities, YangMillsAgainstIndexLoops) {
  Rng rng(15);
  auto brute = [](const TwoForm4& D, const QuadForm4& Bi) {
    double s = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) s += D(m, n) * D(a, b) * Bi(m, a) * Bi(n, b);
    return s;
  };
  const Point4 origin{0, 0, 0, 0};
  const FormParams unit_a{1.0, 0.0, 0.0};
  // At the origin B = eta and D = dx0^dx2 + dx1^dx2, so the sum is 2(-1 + 1) = 0.
  EXPECT_NEAR(ym_scalar(origin, unit_a), brute(induced_D(origin, unit_a), eta4()), 1e-15);
  EXPECT_NEAR(ym_scalar(origin, unit_a), 0.0, 1e-15);
  for (int i = 0; i < 100; ++i) {
    const Point4 x = random_ds_point(rng, kUnit, 0.6);
    const FormParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double expected = brute(induced_D(x, p), inverse_B(x, kUnit));
    EXPECT_NEAR(ym_scalar(x, p), expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}
