#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tpd/core/dual.hpp"
#include "tpd/core/matrix.hpp"
#include "tpd/core/nullspace.hpp"
#include "tpd/core/poly.hpp"
#include "tpd/core/qsqrt2.hpp"
#include "tpd/core/random.hpp"

using namespace tpd;

namespace {

Rational random_rational(Rng& rng) {
  return Rational(rng.integer(-50, 50), rng.integer(1, 17));
}

}  // namespace

TEST(QSqrt2, NormIdentityOnRandomRationals) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Rational p = random_rational(rng);
    const Rational q = random_rational(rng);
    const QSqrt2 x(p, q);
    EXPECT_EQ(x * x.conjugate(), QSqrt2(p * p - 2 * q * q));
  }
}

TEST(QSqrt2, FieldOperations) {
  const QSqrt2 r2 = QSqrt2::sqrt2();
  EXPECT_EQ(r2 * r2, QSqrt2(2));
  EXPECT_EQ(QSqrt2::inv_sqrt2() * r2, QSqrt2(1));
  const QSqrt2 x(Rational(3, 4), Rational(-5, 2));
  EXPECT_EQ((x / x), QSqrt2(1));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_NEAR(x.to_double(), 0.75 - 2.5 * std::sqrt(2.0), 1e-15);
  EXPECT_THROW(x / QSqrt2(0), InvalidInput);
  EXPECT_EQ(QSqrt2(Rational(1, 2), Rational(-1)).str(), "1/2-sqrt2");
}

TEST(Dual, ConstantHasZeroDerivative) {
  using D = Dual<double, 3>;
  const D c(2.5);
  for (double g : c.d) EXPECT_EQ(g, 0.0);
  const D x = D::variable(0.7, 1);
  const D y = c * x + c;
  EXPECT_EQ(y.d[0], 0.0);
  EXPECT_EQ(y.d[1], 2.5);
}

TEST(Dual, CompositeMatchesCentralDifferences) {
  using D = Dual<double, 1>;
  auto f = [](auto x) {
    using std::cosh;
    using std::exp;
    using std::log;
    using std::sqrt;
    auto g = sqrt(1.0 + x * x) / (2.0 + tanh(x));
    return exp(g) * log(1.5 + cosh(g)) - pow(g, 2.5);
  };
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const double x0 = rng.uniform(-2.0, 2.0);
    const D y = f(D::variable(x0, 0));
    const double h = 1e-5;
    const double fd = (f(x0 + h) - f(x0 - h)) / (2 * h);
    EXPECT_NEAR(y.d[0], fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(Dual, NestedGivesSecondDerivatives) {
  using D1 = Dual<double, 2>;
  using D2 = Dual<D1, 2>;
  const double x = 0.3, y = -0.8;
  const D2 X = D2::variable(D1::variable(x, 0), 0);
  const D2 Y = D2::variable(D1::variable(y, 1), 1);
  const D2 f = X * X * Y + exp(X * Y);
  const double e = std::exp(x * y);
  EXPECT_NEAR(f.d[0].d[0], 2 * y + y * y * e, 1e-14);
  EXPECT_NEAR(f.d[0].d[1], 2 * x + e + x * y * e, 1e-14);
  EXPECT_NEAR(f.d[1].d[0], f.d[0].d[1], 1e-14);
  EXPECT_NEAR(f.d[1].d[1], x * x * e, 1e-14);
}

TEST(Nullspace, IdentityHasEmptyBasis) {
  DynMatrix<Rational> m(3, 3);
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  EXPECT_TRUE(nullspace(m).empty());
  EXPECT_EQ(rank(m), 3u);
}

TEST(Nullspace, ZeroMapHasFullBasis) {
  DynMatrix<QSqrt2> m(2, 2);
  EXPECT_EQ(nullspace(m).size(), 2u);
}

TEST(Nullspace, RankNullityOnRandomExactMatrices) {
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 25));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 25));
    // Low-rank products so that nullspaces are nontrivial.
    const std::size_t inner = static_cast<std::size_t>(rng.integer(1, 25));
    DynMatrix<Rational> a(rows, inner), b(inner, cols), m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k) a(i, k) = Rational(rng.integer(-3, 3));
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) b(k, j) = Rational(rng.integer(-3, 3));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) m(i, j) += a(i, k) * b(k, j);

    const auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + rank(m), cols);
    for (const auto& v : basis)
      for (const auto& e : m.apply(v)) EXPECT_EQ(e, 0);
  }
}

TEST(Nullspace, WorksOverQSqrt2) {
  // Rows (1, sqrt2) and (sqrt2, 2) are dependent; kernel spanned by (-sqrt2, 1).
  DynMatrix<QSqrt2> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = QSqrt2::sqrt2();
  m(1, 0) = QSqrt2::sqrt2();
  m(1, 1) = 2;
  const auto basis = nullspace(m);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0][0], -QSqrt2::sqrt2());
  EXPECT_EQ(basis[0][1], QSqrt2(1));
}

TEST(Matexp, ZeroGivesIdentity) {
  EXPECT_EQ(matexp(Mat5::zero()), Mat5::identity());
}

TEST(Matexp, QuarterTurnInPlaneTwoThree) {
  Mat5 a = Mat5::zero();
  a(2, 3) = std::numbers::pi / 2;
  a(3, 2) = -std::numbers::pi / 2;
  const Mat5 r = matexp(a);
  Mat5 expected = Mat5::identity();
  expected(2, 2) = expected(3, 3) = 0.0;
  expected(2, 3) = 1.0;
  expected(3, 2) = -1.0;
  EXPECT_LT(max_abs(r - expected), 1e-14);
}

TEST(Matexp, InverseAndIsometryProperty) {
  Rng rng(3);
  const Mat5 eta = eta5();
  for (int trial = 0; trial < 100; ++trial) {
    // Random element of o(1,4): X = S eta with S antisymmetric.
    Mat5 s = Mat5::zero();
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        s(i, j) = rng.uniform(-1.0, 1.0);
        s(j, i) = -s(i, j);
      }
    Mat5 x = s * eta;
    const double n = norm_inf(x);
    if (n > 5.0) x = (5.0 / n) * x;
    const Mat5 m = matexp(x);
    EXPECT_LT(norm_inf(m * matexp(-x) - Mat5::identity()), 1e-12);
    EXPECT_LT(max_abs(transpose(m) * eta * m - eta), 1e-9);
  }
}

TEST(Matexp, RejectsNonFinite) {
  Mat4 a = Mat4::zero();
  a(0, 1) = std::nan("");
  EXPECT_THROW(matexp(a), InvalidInput);
  a(0, 1) = 1e6;
  EXPECT_THROW(matexp(a), InvalidInput);
}

TEST(MatrixOps, DeterminantAndInverse) {
  Mat3 m;
  m.a = {2, 1, 0, 1, 3, 1, 0, 1, 4};
  EXPECT_NEAR(det(m), 18.0, 1e-12);
  EXPECT_LT(max_abs(m * inverse(m) - Mat3::identity()), 1e-14);
  Mat3 singular;
  singular.a = {1, 2, 3, 2, 4, 6, 0, 1, 1};
  EXPECT_THROW(inverse(singular), DomainError);
  EXPECT_EQ(levi_civita(0, 1, 2), 1);
  EXPECT_EQ(levi_civita(1, 0, 2), -1);
  EXPECT_EQ(levi_civita(2, 0, 1), 1);
  EXPECT_EQ(levi_civita(1, 1, 2), 0);
}

TEST(PolyApply, DerivationKillsConstants) {
  EXPECT_TRUE(poly_apply("J0", Poly4::constant(1)).is_zero());
  EXPECT_TRUE(poly_apply("M12", Poly4::constant(7)).is_zero());
}

TEST(PolyApply, JOneOnCoordinate) {
  // d_1 x^1 + x^1 x^1 (eta_11 = 1)
  const Poly4 expected = Poly4::constant(1) + Poly4::monomial({0, 2, 0, 0});
  EXPECT_EQ(poly_apply("J1", Poly4::coordinate(1)), expected);
  // J0 x^0 = 1 - x0^2 from eta_00 = -1.
  EXPECT_EQ(poly_apply("J0", Poly4::coordinate(0)),
            Poly4::constant(1) - Poly4::monomial({2, 0, 0, 0}));
}

TEST(PolyApply, UnknownOperator) {
  EXPECT_THROW(poly_apply("K2", Poly4::constant(1)), InvalidInput);
  EXPECT_THROW(poly_apply("M11", Poly4::constant(1)), InvalidInput);
  EXPECT_THROW(poly_apply("J4", Poly4::constant(1)), InvalidInput);
}

namespace {

// M_{mn} for any ordered pair, with M_mm = 0 and M_nm = -M_mn.
Poly4 apply_m(int m, int n, const Poly4& p) {
  if (m == n) return {};
  if (m < n) return PolyOperator{PolyOperator::Kind::M, m, n}.apply(p);
  return Rational(-1) * PolyOperator{PolyOperator::Kind::M, n, m}.apply(p);
}
Poly4 apply_j(int m, const Poly4& p) { return PolyOperator{PolyOperator::Kind::J, m, 0}.apply(p); }
Rational eta(int m, int n) { return m == n ? Rational(eta_diag(m)) : Rational(0); }

}  // namespace

TEST(PolyApply, BracketStructureConstantsOnLowDegreeMonomials) {
  const auto monos = monomials_up_to(3);
  for (const auto& e : monos) {
    const Poly4 p = Poly4::monomial(e);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        // [J_mu, J_nu] = -M_mu nu
        const Poly4 jj = apply_j(mu, apply_j(nu, p)) - apply_j(nu, apply_j(mu, p));
        EXPECT_EQ(jj, Rational(-1) * apply_m(mu, nu, p));
      }
    for (int mu = 0; mu < 4; ++mu)
      for (int al = 0; al < 4; ++al)
        for (int be = al + 1; be < 4; ++be) {
          // [J_mu, M_ab] = eta_mu a J_b - eta_mu b J_a
          const Poly4 jm = apply_j(mu, apply_m(al, be, p)) - apply_m(al, be, apply_j(mu, p));
          EXPECT_EQ(jm, eta(mu, al) * apply_j(be, p) - eta(mu, be) * apply_j(al, p));
        }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu)
        for (int al = 0; al < 4; ++al)
          for (int be = al + 1; be < 4; ++be) {
            const Poly4 mm =
                apply_m(mu, nu, apply_m(al, be, p)) - apply_m(al, be, apply_m(mu, nu, p));
            const Poly4 rhs = eta(mu, be) * apply_m(nu, al, p) + eta(nu, al) * apply_m(mu, be, p) -
                              eta(mu, al) * apply_m(nu, be, p) - eta(nu, be) * apply_m(mu, al, p);
            EXPECT_EQ(mm, rhs);
          }
  }
}

TEST(Poly4, DerivativeLowersDegree) {
  const Poly4 p = Poly4::monomial({1, 2, 0, 1}, Rational(3, 2)) + Poly4::coordinate(2);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.derivative(1).degree(), 3);
  EXPECT_EQ(p.derivative(1).coefficient({1, 1, 0, 1}), Rational(3));
  EXPECT_NEAR(p.evaluate({1.0, 2.0, 3.0, 0.5}), 1.5 * 4 * 0.5 + 3.0, 1e-15);
}
