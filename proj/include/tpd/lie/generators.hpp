#pragma once

// Exact generator matrices of o(1,4) (or o(2,3)) in the defining
// representation, with l1 = 1:
//   (M_AB)^C_D = delta_A^C eta_BD - delta_B^C eta_AD,   J_mu = M_mu4,
//   K_i^+- = (M_0i +- M_1i)/sqrt2 (i = 2, 3),  F_i^+- = (M_0i +- J_i)/sqrt2,
//   L_i = 1/2 eps_ijk M_jk,  P^+- = (J_0 +- J_1)/sqrt2,  R = M_01,  T = M_23.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tpd/core/errors.hpp"
#include "tpd/core/matrix.hpp"
#include "tpd/core/qsqrt2.hpp"
#include "tpd/geometry/metric.hpp"

namespace tpd {

using QMat5 = Mat<QSqrt2, 5>;

struct Generator {
  std::string name;
  QMat5 matrix;
};

inline QMat5 algebra_metric(Branch branch = Branch::dS) {
  return eta5<QSqrt2>(branch == Branch::dS ? QSqrt2(1) : QSqrt2(-1));
}

inline QMat5 basis_M(int A, int B, Branch branch = Branch::dS) {
  if (A < 0 || A > 4 || B < 0 || B > 4) throw InvalidInput("basis_M: index out of range");
  const QMat5 eta = algebra_metric(branch);
  QMat5 m = QMat5::zero();
  for (int D = 0; D < 5; ++D) {
    m(A, D) += eta(B, D);
    m(B, D) -= eta(A, D);
  }
  return m;
}

inline QMat5 bracket(const QMat5& x, const QMat5& y) { return x * y - y * x; }

// X^T eta + eta X, zero for algebra members.
inline QMat5 membership_defect(const QMat5& x, Branch branch = Branch::dS) {
  const QMat5 eta = algebra_metric(branch);
  return transpose(x) * eta + eta * x;
}

namespace detail {

inline int sign_of(char c, const std::string& name) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw InvalidInput("unknown generator: " + name);
}

inline int index_of(char c, int lo, int hi, const std::string& name) {
  const int k = c - '0';
  if (k < lo || k > hi) throw InvalidInput("unknown generator: " + name);
  return k;
}

}  // namespace detail

/// Generator by name: "M01".."M34" (any A != B), "J0".."J3", "K2+", "K3-",
/// "F1+".."F3-", "L1".."L3", "P+", "P-", "R", "T".
inline Generator generator(const std::string& name, Branch branch = Branch::dS) {
  const QSqrt2 r = QSqrt2::inv_sqrt2();
  auto M = [&](int a, int b) { return basis_M(a, b, branch); };
  const auto n = name.size();
  if (name == "R") return {name, M(0, 1)};
  if (name == "T") return {name, M(2, 3)};
  if (n == 3 && name[0] == 'M') {
    const int a = detail::index_of(name[1], 0, 4, name);
    const int b = detail::index_of(name[2], 0, 4, name);
    if (a == b) throw InvalidInput("unknown generator: " + name);
    return {name, M(a, b)};
  }
  if (n == 2 && name[0] == 'J') return {name, M(detail::index_of(name[1], 0, 3, name), 4)};
  if (n == 2 && name[0] == 'L') {
    const int i = detail::index_of(name[1], 1, 3, name);
    const int j = i % 3 + 1, k = j % 3 + 1;  // cyclic
    return {name, M(j, k)};
  }
  if (n == 2 && name[0] == 'P') {
    const int s = detail::sign_of(name[1], name);
    return {name, r * (M(0, 4) + QSqrt2(s) * M(1, 4))};
  }
  if (n == 3 && name[0] == 'K') {
    const int i = detail::index_of(name[1], 2, 3, name);
    const int s = detail::sign_of(name[2], name);
    return {name, r * (M(0, i) + QSqrt2(s) * M(1, i))};
  }
  if (n == 3 && name[0] == 'F') {
    const int i = detail::index_of(name[1], 1, 3, name);
    const int s = detail::sign_of(name[2], name);
    return {name, r * (M(0, i) + QSqrt2(s) * M(i, 4))};
  }
  throw InvalidInput("unknown generator: " + name);
}

// Every named generator of the catalog (with both signs).
inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) out.push_back("M" + std::to_string(a) + std::to_string(b));
  for (int m = 0; m < 4; ++m) out.push_back("J" + std::to_string(m));
  for (const char* s : {"+", "-"}) {
    out.push_back(std::string("K2") + s);
    out.push_back(std::string("K3") + s);
    for (int i = 1; i <= 3; ++i) out.push_back("F" + std::to_string(i) + s);
    out.push_back(std::string("P") + s);
  }
  for (int i = 1; i <= 3; ++i) out.push_back("L" + std::to_string(i));
  out.push_back("R");
  out.push_back("T");
  return out;
}

namespace detail {

inline QMat5 from_ints(const std::array<std::array<int, 5>, 5>& rows, const QSqrt2& scale) {
  QMat5 m;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = scale * QSqrt2(rows[i][j]);
  return m;
}

}  // namespace detail

/// Printed generator matrices (l1 = 1):
/// K2+, K3+, P+, T, F1+, F2+, F3+.
inline QMat5 printed_generator(const std::string& name) {
  const QSqrt2 r = QSqrt2::inv_sqrt2();
  using Rows = std::array<std::array<int, 5>, 5>;
  if (name == "K2+")
    return detail::from_ints(Rows{{{0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}, {1, -1, 0, 0, 0}, {}, {}}}, r);
  if (name == "K3+")
    return detail::from_ints(Rows{{{0, 0, 0, 1, 0}, {0, 0, 0, 1, 0}, {}, {1, -1, 0, 0, 0}, {}}}, r);
  if (name == "P+")
    return detail::from_ints(Rows{{{0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {}, {}, {1, -1, 0, 0, 0}}}, QSqrt2(1));
  if (name == "T")
    return detail::from_ints(Rows{{{}, {}, {0, 0, 0, 1, 0}, {0, 0, -1, 0, 0}, {}}}, QSqrt2(1));
  if (name == "F1+")
    return detail::from_ints(Rows{{{0, 1, 0, 0, 0}, {1, 0, 0, 0, 1}, {}, {}, {0, -1, 0, 0, 0}}}, r);
  if (name == "F2+")
    return detail::from_ints(Rows{{{0, 0, 1, 0, 0}, {}, {1, 0, 0, 0, 1}, {}, {0, 0, -1, 0, 0}}}, r);
  if (name == "F3+")
    return detail::from_ints(Rows{{{0, 0, 0, 1, 0}, {}, {}, {1, 0, 0, 0, 1}, {0, 0, 0, -1, 0}}}, r);
  throw InvalidInput("no printed matrix for generator: " + name);
}

inline std::vector<std::string> printed_generator_names() {
  return {"K2+", "K3+", "P+", "T", "F1+", "F2+", "F3+"};
}

// If y = m x exactly for a scalar m, returns m. Both zero gives 1.
inline std::optional<QSqrt2> proportionality(const QMat5& y, const QMat5& x) {
  std::optional<QSqrt2> m;
  for (int i = 0; i < 5 && !m; ++i)
    for (int j = 0; j < 5 && !m; ++j)
      if (!x(i, j).is_zero()) m = y(i, j) / x(i, j);
  if (!m) {
    for (const auto& e : y.a)
      if (!e.is_zero()) return std::nullopt;
    return QSqrt2(1);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (y(i, j) != *m * x(i, j)) return std::nullopt;
  return m;
}

/// Coordinates of an algebra element in the basis M_AB (A < B).
inline std::map<std::pair<int, int>, QSqrt2> m_coordinates(const QMat5& x, Branch branch = Branch::dS) {
  const QMat5 eta = algebra_metric(branch);
  std::map<std::pair<int, int>, QSqrt2> c;
  QMat5 rebuilt = QMat5::zero();
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      const QSqrt2 v = x(a, b) / eta(b, b);
      if (v.is_zero()) continue;
      c[{a, b}] = v;
      rebuilt += v * basis_M(a, b, branch);
    }
  if (!(rebuilt == x)) throw InvalidInput("m_coordinates: matrix is not in the algebra");
  return c;
}

}  // namespace tpd
