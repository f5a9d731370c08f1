#pragma once

// Small fixed-size dense matrices over any scalar kind (double, Dual,
// QSqrt2), plus the constant metrics used throughout.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <type_traits>

#include "tpd/core/dual.hpp"
#include "tpd/core/errors.hpp"
#include "tpd/core/qsqrt2.hpp"

namespace tpd {

template <class T, std::size_t N>
using Vec = std::array<T, N>;

template <class T, std::size_t R, std::size_t C = R>
struct Mat {
  std::array<T, R * C> a{};

  static constexpr std::size_t rows = R;
  static constexpr std::size_t cols = C;

  T& operator()(std::size_t i, std::size_t j) { return a[i * C + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * C + j]; }

  static Mat zero() {
    Mat m;
    m.a.fill(T(0));
    return m;
  }
  static Mat identity() requires(R == C) {
    Mat m = zero();
    for (std::size_t i = 0; i < R; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat diag(const Vec<T, R>& d) requires(R == C) {
    Mat m = zero();
    for (std::size_t i = 0; i < R; ++i) m(i, i) = d[i];
    return m;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < R * C; ++k) a[k] += o.a[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < R * C; ++k) a[k] -= o.a[k];
    return *this;
  }
  Mat operator-() const {
    Mat m;
    for (std::size_t k = 0; k < R * C; ++k) m.a[k] = -a[k];
    return m;
  }

  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }
};

using Mat3 = Mat<double, 3>;
using Mat4 = Mat<double, 4>;
using Mat5 = Mat<double, 5>;

template <class T, std::size_t R, std::size_t K, std::size_t C>
Mat<T, R, C> operator*(const Mat<T, R, K>& x, const Mat<T, K, C>& y) {
  Mat<T, R, C> m = Mat<T, R, C>::zero();
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t j = 0; j < C; ++j) m(i, j) += x(i, k) * y(k, j);
  return m;
}

template <class T, std::size_t R, std::size_t C, class S>
  requires(std::is_arithmetic_v<S> || std::is_same_v<S, T>)
Mat<T, R, C> operator*(const S& s, Mat<T, R, C> m) {
  for (auto& x : m.a) x = x * s;
  return m;
}

template <class T, std::size_t R, std::size_t C>
Vec<T, R> operator*(const Mat<T, R, C>& m, const Vec<T, C>& v) {
  Vec<T, R> r;
  r.fill(T(0));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <class T, std::size_t R, std::size_t C>
Mat<T, C, R> transpose(const Mat<T, R, C>& m) {
  Mat<T, C, R> t;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) t(j, i) = m(i, j);
  return t;
}

template <class T, std::size_t N>
T dot(const Vec<T, N>& x, const Vec<T, N>& y) {
  T s(0);
  for (std::size_t i = 0; i < N; ++i) s += x[i] * y[i];
  return s;
}

// Infinity norm of a matrix: max absolute row sum.
template <std::size_t R, std::size_t C>
double norm_inf(const Mat<double, R, C>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < R; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < C; ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Largest absolute entry.
template <std::size_t R, std::size_t C>
double max_abs(const Mat<double, R, C>& m) {
  double best = 0.0;
  for (double x : m.a) best = std::max(best, std::abs(x));
  return best;
}

template <std::size_t N>
double max_abs(const Vec<double, N>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

namespace detail {

// Pivot weight: exact scalars pick any nonzero entry, floating ones the largest.
inline double pivot_weight(const QSqrt2& x) { return x.is_zero() ? 0.0 : 1.0; }
inline double pivot_weight(const Rational& x) { return x == 0 ? 0.0 : 1.0; }
template <class T>
double pivot_weight(const T& x) {
  return std::abs(value_of(x));
}

}  // namespace detail

template <class T, std::size_t N>
T det(Mat<T, N> m) {
  T result(1);
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    double best = detail::pivot_weight(m(c, c));
    for (std::size_t r = c + 1; r < N; ++r) {
      double w = detail::pivot_weight(m(r, c));
      if (w > best) {
        best = w;
        p = r;
      }
    }
    if (best == 0.0) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(p, j), m(c, j));
      result = -result;
    }
    result = result * m(c, c);
    for (std::size_t r = c + 1; r < N; ++r) {
      T f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < N; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return result;
}

// Gauss-Jordan inverse with partial pivoting. Throws DomainError if singular.
template <class T, std::size_t N>
Mat<T, N> inverse(Mat<T, N> m) {
  Mat<T, N> inv = Mat<T, N>::identity();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    double best = detail::pivot_weight(m(c, c));
    for (std::size_t r = c + 1; r < N; ++r) {
      double w = detail::pivot_weight(m(r, c));
      if (w > best) {
        best = w;
        p = r;
      }
    }
    if (best == 0.0) throw DomainError("inverse: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    T piv = m(c, c);
    for (std::size_t j = 0; j < N; ++j) {
      m(c, j) = m(c, j) / piv;
      inv(c, j) = inv(c, j) / piv;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      T f = m(r, c);
      for (std::size_t j = 0; j < N; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T, std::size_t N>
Vec<T, N> solve(const Mat<T, N>& m, const Vec<T, N>& rhs) {
  return inverse(m) * rhs;
}

template <std::size_t R, std::size_t C>
Mat<double, R, C> to_double(const Mat<QSqrt2, R, C>& m) {
  Mat<double, R, C> r;
  for (std::size_t k = 0; k < R * C; ++k) r.a[k] = m.a[k].to_double();
  return r;
}

template <class T, std::size_t R, std::size_t C>
std::ostream& operator<<(std::ostream& os, const Mat<T, R, C>& m) {
  for (std::size_t i = 0; i < R; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < C; ++j) os << (j ? ", " : "") << m(i, j);
    os << (i + 1 == R ? "]" : "\n");
  }
  return os;
}

// Minkowski metric diag(-1, 1, 1, 1).
template <class T = double>
Mat<T, 4> eta4() {
  return Mat<T, 4>::diag({T(-1), T(1), T(1), T(1)});
}

// diag(-1, 1, 1, 1, last): the five dimensional de Sitter form for last = 1
// and the anti de Sitter form (second time direction W) for last = -1.
template <class T = double>
Mat<T, 5> eta5(T last = T(1)) {
  return Mat<T, 5>::diag({T(-1), T(1), T(1), T(1), last});
}

// Diagonal entry of diag(-1, 1, 1, 1).
inline constexpr int eta_diag(int mu) { return mu == 0 ? -1 : 1; }

inline constexpr int kronecker(int i, int j) { return i == j ? 1 : 0; }

// Totally antisymmetric symbol on {0,1,2} (pass zero based indices).
inline constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// Matrix exponential by scaling and squaring of a Taylor series. The series
// is truncated once a term drops below 1e-16 relative to the partial sum.
template <std::size_t N>
Mat<double, N> matexp(const Mat<double, N>& A) {
  for (double x : A.a)
    if (!std::isfinite(x)) throw InvalidInput("matexp: non-finite entry");
  const double nrm = norm_inf(A);
  if (nrm > 700.0) throw InvalidInput("matexp: norm too large, result would overflow");

  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  Mat<double, N> X = scale * A;

  Mat<double, N> sum = Mat<double, N>::identity();
  Mat<double, N> term = Mat<double, N>::identity();
  for (int k = 1; k < 40; ++k) {
    term = (1.0 / k) * (term * X);
    sum += term;
    if (norm_inf(term) <= 1e-16 * norm_inf(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace tpd
