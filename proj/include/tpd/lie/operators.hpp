#pragma once

// Matrix generators against the differential-operator realization
//   J_mu = d_mu + x_mu x^n d_n,   M_mn = x_m d_n - x_n d_m,
// with M_mu4 <-> J_mu. Brackets must carry the same structure constants.

#include <string>
#include <vector>

#include "tpd/core/poly.hpp"
#include "tpd/lie/generators.hpp"

namespace tpd {

inline PolyOperator operator_for(int a, int b) {
  if (b == 4) return {PolyOperator::Kind::J, a, 0};
  return {PolyOperator::Kind::M, a, b};
}

struct CorrespondenceReport {
  std::size_t pairs = 0;
  std::size_t monomials = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;
};

/// For every pair of basis elements, [op_X, op_Y] p = op_[X,Y] p on all
/// monomials p of degree <= max_degree.
inline CorrespondenceReport operator_correspondence(int max_degree = 3) {
  std::vector<std::pair<int, int>> basis;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) basis.emplace_back(a, b);
  const auto monos = monomials_up_to(max_degree);
  CorrespondenceReport rep;
  rep.monomials = monos.size();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      ++rep.pairs;
      const auto [a, b] = basis[i];
      const auto [c, d] = basis[j];
      const auto coords = m_coordinates(bracket(basis_M(a, b), basis_M(c, d)));
      const PolyOperator X = operator_for(a, b), Y = operator_for(c, d);
      for (const auto& e : monos) {
        const Poly4 p = Poly4::monomial(e);
        Poly4 expected;
        for (const auto& [cd, v] : coords)
          expected = expected + v.rational_part() * operator_for(cd.first, cd.second).apply(p);
        if (poly_commutator(X, Y, p) != expected) {
          ++rep.mismatches;
          if (rep.failures.size() < 10) rep.failures.push_back("[" + X.name() + "," + Y.name() + "] on " + p.str());
        }
      }
    }
  return rep;
}

}  // namespace tpd
