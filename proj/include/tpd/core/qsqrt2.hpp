#pragma once

// Exact arithmetic in the quadratic field Q(sqrt 2).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <ostream>
#include <string>

#include "tpd/core/errors.hpp"

namespace tpd {

using Rational = boost::multiprecision::cpp_rational;

/// p + q*sqrt(2) with rational p, q. Equality is exact.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int p) : p_(p) {}  // NOLINT: integers embed implicitly
  QSqrt2(Rational p) : p_(std::move(p)) {}  // NOLINT
  QSqrt2(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }
  static QSqrt2 inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt2_part() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }

  // p^2 - 2 q^2, the field norm.
  Rational norm() const { return p_ * p_ - 2 * q_ * q_; }
  QSqrt2 conjugate() const { return {p_, -q_}; }

  double to_double() const {
    return static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(2.0);
  }

  QSqrt2 operator-() const { return {-p_, -q_}; }

  QSqrt2& operator+=(const QSqrt2& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational p = p_ * o.p_ + 2 * q_ * o.q_;
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
  }
  QSqrt2& operator/=(const QSqrt2& o) {
    if (o.is_zero()) throw InvalidInput("QSqrt2: division by zero");
    Rational n = o.norm();
    *this *= o.conjugate();
    p_ /= n;
    q_ /= n;
    return *this;
  }

  friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
  friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
  friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
  friend QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }

  friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }

  // "p", "q*sqrt2" or "p+q*sqrt2"; rationals printed as n or n/d.
  std::string str() const {
    if (q_ == 0) return p_.str();
    std::string s;
    if (p_ != 0) s = p_.str() + (q_ > 0 ? "+" : "");
    if (q_ == 1) return s + "sqrt2";
    if (q_ == -1) return s + "-sqrt2";
    return s + q_.str() + "*sqrt2";
  }

  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

 private:
  Rational p_{0};
  Rational q_{0};
};

inline double to_double(const QSqrt2& x) { return x.to_double(); }
inline double to_double(const Rational& x) { return static_cast<double>(x); }

}  // namespace tpd
