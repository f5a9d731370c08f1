#pragma once

// Polynomials in x^0..x^3 with rational coefficients and the first-order
// differential operators
//   J_mu  = d_mu + eta_{mu a} x^a x^n d_n
//   M_mn  = eta_{m a} x^a d_n - eta_{n a} x^a d_m
// that realize the de Sitter algebra on functions (length scale set to 1).

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "tpd/core/errors.hpp"
#include "tpd/core/matrix.hpp"
#include "tpd/core/qsqrt2.hpp"

namespace tpd {

using Exponents = std::array<int, 4>;

class Poly4 {
 public:
  Poly4() = default;

  static Poly4 constant(const Rational& c) {
    Poly4 p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
  }
  static Poly4 monomial(const Exponents& e, const Rational& c = 1) {
    Poly4 p;
    p.add_term(e, c);
    return p;
  }
  // The coordinate function x^mu.
  static Poly4 coordinate(int mu) {
    Exponents e{0, 0, 0, 0};
    e[mu] = 1;
    return monomial(e);
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  Poly4& operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly4& operator-=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
  friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }

  friend Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return r;
  }
  friend Poly4 operator*(const Rational& s, const Poly4& p) {
    Poly4 r;
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }

  friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly4& a, const Poly4& b) { return !(a == b); }

  Poly4 derivative(int mu) const {
    Poly4 r;
    for (const auto& [e, c] : terms_) {
      if (e[mu] == 0) continue;
      Exponents f = e;
      --f[mu];
      r.add_term(f, c * e[mu]);
    }
    return r;
  }

  double evaluate(const std::array<double, 4>& x) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
      double m = static_cast<double>(c);
      for (int k = 0; k < 4; ++k)
        for (int p = 0; p < e[k]; ++p) m *= x[k];
      s += m;
    }
    return s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str();
      for (int k = 0; k < 4; ++k)
        if (e[k] > 0) s += "*x" + std::to_string(k) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    }
    return s;
  }

 private:
  std::map<Exponents, Rational> terms_;
};

// Euler operator x^n d_n: scales each monomial by its degree.
inline Poly4 euler_operator(const Poly4& p) {
  Poly4 r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * (e[0] + e[1] + e[2] + e[3]));
  return r;
}

// A first-order operator of the catalog: J_mu or M_{mu nu}.
struct PolyOperator {
  enum class Kind { J, M } kind;
  int mu;
  int nu;  // unused for J

  std::string name() const {
    return kind == Kind::J ? "J" + std::to_string(mu)
                           : "M" + std::to_string(mu) + std::to_string(nu);
  }

  Poly4 apply(const Poly4& p) const {
    if (kind == Kind::J) {
      // d_mu p + (eta_{mu mu} x^mu) * (x^n d_n p)
      return p.derivative(mu) + Rational(eta_diag(mu)) * (Poly4::coordinate(mu) * euler_operator(p));
    }
    return Rational(eta_diag(mu)) * (Poly4::coordinate(mu) * p.derivative(nu)) -
           Rational(eta_diag(nu)) * (Poly4::coordinate(nu) * p.derivative(mu));
  }
};

// Parses "J0".."J3" and "Mmn" with m, n in 0..3, m != n.
inline PolyOperator parse_poly_operator(const std::string& name) {
  auto digit = [&](char ch) {
    if (ch < '0' || ch > '3') throw InvalidInput("unknown operator: " + name);
    return ch - '0';
  };
  if (name.size() == 2 && name[0] == 'J') return {PolyOperator::Kind::J, digit(name[1]), 0};
  if (name.size() == 3 && name[0] == 'M') {
    int m = digit(name[1]);
    int n = digit(name[2]);
    if (m == n) throw InvalidInput("unknown operator: " + name);
    return {PolyOperator::Kind::M, m, n};
  }
  throw InvalidInput("unknown operator: " + name);
}

/// Applies the named operator (J0..J3, Mmn) to p exactly.
inline Poly4 poly_apply(const std::string& op_name, const Poly4& p) {
  return parse_poly_operator(op_name).apply(p);
}

inline Poly4 poly_commutator(const PolyOperator& a, const PolyOperator& b, const Poly4& p) {
  return a.apply(b.apply(p)) - b.apply(a.apply(p));
}

// All monomials in four variables with total degree <= max_degree.
inline std::vector<Exponents> monomials_up_to(int max_degree) {
  std::vector<Exponents> out;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int c = 0; a + b + c <= max_degree; ++c)
        for (int d = 0; a + b + c + d <= max_degree; ++d) out.push_back({a, b, c, d});
  return out;
}

}  // namespace tpd
