#include <gtest/gtest.h>

#include <cmath>

#include "tpd/core/random.hpp"
#include "tpd/group/invariance.hpp"

using namespace tpd;

namespace {

const GeometryConfig& kUnit = unit_de_sitter();

// Runs body on n (element, point) pairs whose images stay in the half chart.
template <class F>
int for_subgroup_pairs(const SubalgebraSpec& spec, int n, std::uint64_t seed, F&& body) {
  Rng rng(seed);
  int done = 0;
  for (std::uint64_t k = 0; done < n && k < 20u * n; ++k) {
    const auto g = sample_subgroup_element(seed * 7919 + k, 0.5, spec);
    const Point4 x{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
    try {
      flt_apply(g, x, kUnit);
    } catch (const ChartEscape&) {
      continue;
    }
    body(g, x);
    ++done;
  }
  return done;
}

}  // namespace

TEST(SubgroupSampling, ElementsPreserveEta) {
  for (const auto& name : subalgebra_names())
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      EXPECT_LT(defining_residual(sample_subgroup_element(seed, 0.7, subalgebra(name, 1))), 1e-10) << name;
}

TEST(DensityInvariance, DisplayedDUnderH1Minus) {
  Rng rng(1);
  for (DensityKind k : {DensityKind::yang_mills, DensityKind::born_infeld}) {
    const int n = for_subgroup_pairs(subalgebra("H1", -1), 100, 3, [&](const GroupElement& g, const Point4& x) {
      const FormParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      EXPECT_LT(std::abs(density_invariance_residual(g, x, k, displayed_D(p))), 1e-6);
    });
    EXPECT_EQ(n, 100);
  }
}

TEST(DensityInvariance, LoweredDUnderH1Plus) {
  Rng rng(2);
  for (DensityKind k : {DensityKind::yang_mills, DensityKind::born_infeld}) {
    for_subgroup_pairs(subalgebra("H1", 1), 100, 4, [&](const GroupElement& g, const Point4& x) {
      const FormParams p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      EXPECT_LT(std::abs(density_invariance_residual(g, x, k, lowered_D(p))), 1e-6);
    });
  }
}

TEST(DensityInvariance, DisplayedDNotInvariantUnderH1Plus) {
  int broken = 0;
  for_subgroup_pairs(subalgebra("H1", 1), 50, 5, [&](const GroupElement& g, const Point4& x) {
    broken += std::abs(density_invariance_residual(g, x, DensityKind::yang_mills, displayed_D({1.0, 0.5, 0.2}))) > 1e-4;
  });
  EXPECT_GT(broken, 40);
}

TEST(DensityInvariance, GenericElementsBreakIt) {
  const auto g = sample_group_element(17, 0.5);
  const Point4 x{0.1, 0.2, 0.0, -0.1};
  EXPECT_GT(std::abs(density_invariance_residual(g, x, DensityKind::yang_mills, displayed_D({1.0, 0.3, -0.4}))), 1e-4);
}

TEST(DensityInvariance, BackgroundMeasureIsInvariantUnderEverything) {
  // With D = 0 the Born-Infeld density is sqrt|det B|, invariant under the full group.
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = sample_group_element(seed, 0.4);
    const Point4 x{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
    try {
      EXPECT_LT(std::abs(density_invariance_residual(g, x, DensityKind::born_infeld, displayed_D({}))), 1e-9);
    } catch (const ChartEscape&) {
    }
  }
}

TEST(QuadraticFormInvariance, InducedCUnderK23PTMinus) {
  const SubalgebraSpec ex1{"H3", -1, {"K2-", "K3-", "P-", "T"}};
  Rng rng(7);
  const int n = for_subgroup_pairs(ex1, 100, 8, [&](const GroupElement& g, const Point4& x) {
    const FormParams p{rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0};
    EXPECT_LT(form_invariance_residual(g, x, [&](const Point4& y) { return induced_C(y, p); }), 1e-8);
  });
  EXPECT_EQ(n, 100);
}

TEST(FinslerInvariance, DisplayedVUnderK1Minus) {
  Rng rng(9);
  const int n = for_subgroup_pairs(subalgebra("K1", -1), 100, 10, [&](const GroupElement& g, const Point4& x) {
    const KinState s{x[0], {x[1], x[2], x[3]}, {rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)}};
    for (double delta : {2.0, 0.5, -0.7}) {
      const double base = finsler_lagrangian(s, delta, 1.2);
      EXPECT_LT(std::abs(finsler_invariance_residual(g, s, delta, 1.2, VForm::displayed)), 1e-6 * std::max(1.0, std::abs(base)));
    }
  });
  EXPECT_EQ(n, 100);
}

TEST(FinslerInvariance, LoweredVUnderK1Plus) {
  Rng rng(11);
  for_subgroup_pairs(subalgebra("K1", 1), 100, 12, [&](const GroupElement& g, const Point4& x) {
    const KinState s{x[0], {x[1], x[2], x[3]}, {rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)}};
    EXPECT_LT(std::abs(finsler_invariance_residual(g, s, 2.0, 1.0, VForm::lowered_pullback)), 1e-6);
  });
}

TEST(FinslerInvariance, DisplayedVNotInvariantUnderK1Plus) {
  int broken = 0;
  for_subgroup_pairs(subalgebra("K1", 1), 50, 13, [&](const GroupElement& g, const Point4& x) {
    const KinState s{x[0], {x[1], x[2], x[3]}, {0.1, -0.05, 0.0}};
    broken += std::abs(finsler_invariance_residual(g, s, 2.0, 1.0, VForm::displayed)) > 1e-4;
  });
  EXPECT_GT(broken, 40);
}
