#pragma once

// Forward-mode dual numbers with a fixed number of derivative slots.
//
// Dual<T, N> carries a value and N partial derivatives. Nesting
// Dual<Dual<double, N>, N> yields second derivatives: for a seeded input,
// f.d[i].d[j] is d^2 f / dx_i dx_j.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <type_traits>

namespace tpd {

template <class T, std::size_t N>
struct Dual;

template <class T>
struct is_dual : std::false_type {};
template <class T, std::size_t N>
struct is_dual<Dual<T, N>> : std::true_type {};
template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

template <class S>
concept Arithmetic = std::is_arithmetic_v<S>;

template <class T, std::size_t N>
struct Dual {
  using value_type = T;
  static constexpr std::size_t slots = N;

  T v{};
  std::array<T, N> d{};

  constexpr Dual() = default;
  template <Arithmetic S>
  constexpr Dual(S s) : v(static_cast<T>(s)) {}  // NOLINT: constants convert implicitly
  constexpr Dual(const T& value) requires(!std::is_arithmetic_v<T>) : v(value) {}  // NOLINT
  constexpr Dual(const T& value, const std::array<T, N>& grad) : v(value), d(grad) {}

  // Independent variable number `slot` with value x.
  static constexpr Dual variable(const T& x, std::size_t slot) {
    Dual r(x);
    r.d[slot] = T(1);
    return r;
  }

  constexpr Dual operator-() const {
    Dual r;
    r.v = -v;
    for (std::size_t i = 0; i < N; ++i) r.d[i] = -d[i];
    return r;
  }

  constexpr Dual& operator+=(const Dual& o) {
    v += o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    for (std::size_t i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  constexpr Dual& operator/=(const Dual& o) {
    T inv = T(1) / o.v;
    T q = v * inv;
    for (std::size_t i = 0; i < N; ++i) d[i] = (d[i] - q * o.d[i]) * inv;
    v = q;
    return *this;
  }
};

// Derivative bookkeeping for a unary function with f(v) = fv and f'(v) = df.
template <class T, std::size_t N>
constexpr Dual<T, N> chain(const Dual<T, N>& x, const T& fv, const T& df) {
  Dual<T, N> r;
  r.v = fv;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = df * x.d[i];
  return r;
}

template <class T, std::size_t N>
constexpr Dual<T, N> operator+(Dual<T, N> a, const Dual<T, N>& b) { return a += b; }
template <class T, std::size_t N>
constexpr Dual<T, N> operator-(Dual<T, N> a, const Dual<T, N>& b) { return a -= b; }
template <class T, std::size_t N>
constexpr Dual<T, N> operator*(Dual<T, N> a, const Dual<T, N>& b) { return a *= b; }
template <class T, std::size_t N>
constexpr Dual<T, N> operator/(Dual<T, N> a, const Dual<T, N>& b) { return a /= b; }

// Mixed operations with plain arithmetic scalars.
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator+(Dual<T, N> a, S s) { a.v += s; return a; }
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator+(S s, Dual<T, N> a) { a.v += s; return a; }
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator-(Dual<T, N> a, S s) { a.v -= s; return a; }
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator-(S s, const Dual<T, N>& a) { return Dual<T, N>(s) - a; }
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator*(Dual<T, N> a, S s) {
  a.v *= s;
  for (auto& x : a.d) x *= s;
  return a;
}
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator*(S s, Dual<T, N> a) { return a * s; }
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator/(Dual<T, N> a, S s) {
  a.v /= s;
  for (auto& x : a.d) x /= s;
  return a;
}
template <class T, std::size_t N, Arithmetic S>
constexpr Dual<T, N> operator/(S s, const Dual<T, N>& a) { return Dual<T, N>(s) / a; }

// Comparisons look only at the value.
template <class T, std::size_t N>
constexpr bool operator<(const Dual<T, N>& a, const Dual<T, N>& b) { return a.v < b.v; }
template <class T, std::size_t N>
constexpr bool operator>(const Dual<T, N>& a, const Dual<T, N>& b) { return a.v > b.v; }
template <class T, std::size_t N, Arithmetic S>
constexpr bool operator<(const Dual<T, N>& a, S s) { return a.v < s; }
template <class T, std::size_t N, Arithmetic S>
constexpr bool operator>(const Dual<T, N>& a, S s) { return a.v > s; }
template <class T, std::size_t N, Arithmetic S>
constexpr bool operator<=(const Dual<T, N>& a, S s) { return a.v <= s; }
template <class T, std::size_t N, Arithmetic S>
constexpr bool operator>=(const Dual<T, N>& a, S s) { return a.v >= s; }

// Innermost floating value of a possibly nested dual.
template <Arithmetic S>
constexpr double value_of(S s) { return static_cast<double>(s); }
template <class T, std::size_t N>
constexpr double value_of(const Dual<T, N>& x) { return value_of(x.v); }

template <class T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& x) {
  using std::sqrt;
  T s = sqrt(x.v);
  return chain(x, s, T(0.5) / s);
}
template <class T, std::size_t N>
Dual<T, N> exp(const Dual<T, N>& x) {
  using std::exp;
  T e = exp(x.v);
  return chain(x, e, e);
}
template <class T, std::size_t N>
Dual<T, N> log(const Dual<T, N>& x) {
  using std::log;
  return chain(x, log(x.v), T(1) / x.v);
}
template <class T, std::size_t N>
Dual<T, N> abs(const Dual<T, N>& x) {
  return value_of(x) < 0 ? -x : x;
}
template <class T, std::size_t N>
Dual<T, N> pow(const Dual<T, N>& x, double p) {
  using std::pow;
  T xp1 = pow(x.v, p - 1.0);
  return chain(x, xp1 * x.v, xp1 * p);
}
template <class T, std::size_t N>
Dual<T, N> sinh(const Dual<T, N>& x) {
  using std::cosh;
  using std::sinh;
  return chain(x, sinh(x.v), cosh(x.v));
}
template <class T, std::size_t N>
Dual<T, N> sin(const Dual<T, N>& x) {
  using std::cos;
  using std::sin;
  return chain(x, sin(x.v), cos(x.v));
}
template <class T, std::size_t N>
Dual<T, N> cos(const Dual<T, N>& x) {
  using std::cos;
  using std::sin;
  return chain(x, cos(x.v), -sin(x.v));
}
template <class T, std::size_t N>
Dual<T, N> cosh(const Dual<T, N>& x) {
  using std::cosh;
  using std::sinh;
  return chain(x, cosh(x.v), sinh(x.v));
}
template <class T, std::size_t N>
Dual<T, N> tanh(const Dual<T, N>& x) {
  using std::tanh;
  T th = tanh(x.v);
  return chain(x, th, T(1) - th * th);
}
template <class T, std::size_t N>
Dual<T, N> atanh(const Dual<T, N>& x) {
  using std::atanh;
  return chain(x, atanh(x.v), T(1) / (T(1) - x.v * x.v));
}

}  // namespace tpd
