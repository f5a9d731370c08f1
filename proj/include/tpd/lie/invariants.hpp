#pragma once

// Invariant tensors of a set of generators, as exact nullspaces.
//   vector        X v = 0                   (contravariant / vector)
//                 X^T w = 0                 (covariant)
//   symmetric2,   X C + C X^T = 0           (contravariant)
//   antisymm2     X^T C + C X = 0           (covariant)

#include <optional>
#include <string>
#include <vector>

#include "tpd/core/nullspace.hpp"
#include "tpd/lie/tables.hpp"

namespace tpd {

enum class Species { vector, symmetric2, antisymmetric2 };
enum class Convention { covariant, contravariant, vector };

inline Species parse_species(const std::string& s) {
  if (s == "vector") return Species::vector;
  if (s == "symmetric" || s == "symmetric2") return Species::symmetric2;
  if (s == "antisymmetric" || s == "antisymmetric2") return Species::antisymmetric2;
  throw InvalidInput("unknown species: " + s);
}

inline Convention parse_convention(const std::string& s) {
  if (s == "covariant") return Convention::covariant;
  if (s == "contravariant") return Convention::contravariant;
  if (s == "vector") return Convention::vector;
  throw InvalidInput("unknown convention: " + s);
}

inline std::string to_string(Species s) {
  switch (s) {
    case Species::vector: return "vector";
    case Species::symmetric2: return "symmetric2";
    default: return "antisymmetric2";
  }
}

inline std::string to_string(Convention c) {
  switch (c) {
    case Convention::covariant: return "covariant";
    case Convention::contravariant: return "contravariant";
    default: return "vector";
  }
}

struct InvariantBasis {
  Species species;
  Convention convention;
  std::vector<QMat5> tensors;  // vectors are stored in column 0
  std::size_t dimension() const { return tensors.size(); }
};

namespace detail {

// Unknown-coordinate basis of the species: unit vectors, E_ij + E_ji, or E_ij - E_ji.
inline std::vector<QMat5> species_basis(Species s) {
  std::vector<QMat5> out;
  if (s == Species::vector) {
    for (int i = 0; i < 5; ++i) {
      QMat5 e = QMat5::zero();
      e(i, 0) = QSqrt2(1);
      out.push_back(e);
    }
    return out;
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      if (s == Species::antisymmetric2 && i == j) continue;
      QMat5 e = QMat5::zero();
      e(i, j) = QSqrt2(1);
      e(j, i) = s == Species::symmetric2 ? QSqrt2(1) : QSqrt2(-1);
      if (i == j) e(i, i) = QSqrt2(1);
      out.push_back(e);
    }
  return out;
}

inline QMat5 act(const QMat5& x, const QMat5& t, Species s, Convention c) {
  if (s == Species::vector) return c == Convention::covariant ? transpose(x) * t : x * t;
  if (c == Convention::covariant) return transpose(x) * t + t * x;
  return x * t + t * transpose(x);
}

}  // namespace detail

/// Exact basis of the tensors annihilated by every generator.
inline InvariantBasis invariant_space(const std::vector<QMat5>& generators, Species species, Convention convention) {
  if (species != Species::vector && convention == Convention::vector)
    throw InvalidInput("invariant_space: the vector convention applies to vectors only");
  const auto unknowns = detail::species_basis(species);
  DynMatrix<QSqrt2> constraints(0, unknowns.size());
  for (const auto& x : generators) {
    std::vector<QMat5> images;
    for (const auto& e : unknowns) images.push_back(detail::act(x, e, species, convention));
    for (int r = 0; r < 25; ++r) {
      std::vector<QSqrt2> row(unknowns.size());
      bool any = false;
      for (std::size_t k = 0; k < unknowns.size(); ++k) {
        row[k] = images[k].a[r];
        any = any || !row[k].is_zero();
      }
      if (any) constraints.append_row(row);
    }
  }
  InvariantBasis out{species, convention, {}};
  std::vector<std::vector<QSqrt2>> ns;
  if (constraints.rows() == 0) {
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      std::vector<QSqrt2> v(unknowns.size(), QSqrt2(0));
      v[k] = QSqrt2(1);
      ns.push_back(v);
    }
  } else {
    ns = nullspace(constraints);
  }
  for (const auto& v : ns) {
    QMat5 t = QMat5::zero();
    for (std::size_t k = 0; k < v.size(); ++k) t += v[k] * unknowns[k];
    out.tensors.push_back(t);
  }
  return out;
}

inline InvariantBasis invariant_space(const SubalgebraSpec& spec, Species species, Convention convention,
                                      Branch branch = Branch::dS) {
  return invariant_space(generator_matrices(spec, branch), species, convention);
}

/// True when t lies in the span of the basis.
inline bool in_span(const InvariantBasis& basis, const QMat5& t) {
  auto ext = basis.tensors;
  ext.push_back(t);
  return span_dimension(ext) == span_dimension(basis.tensors);
}

// True when every generator annihilates t under the convention.
inline bool is_invariant(const std::vector<QMat5>& generators, const QMat5& t, Species s, Convention c) {
  for (const auto& x : generators)
    if (!(detail::act(x, t, s, c) == QMat5::zero())) return false;
  return true;
}

inline QMat5 as_column(const std::array<QSqrt2, 5>& v) {
  QMat5 m = QMat5::zero();
  for (int i = 0; i < 5; ++i) m(i, 0) = v[i];
  return m;
}

// Ambient tensors C, D, V, W with exact constants.
inline QMat5 exact_C(const QSqrt2& a, const QSqrt2& b) {
  QMat5 C = QMat5::zero();
  C(0, 0) = a;
  C(0, 1) = C(1, 0) = b;
  C(1, 1) = QSqrt2(2) * b - a;
  C(2, 2) = C(3, 3) = C(4, 4) = b - a;
  return C;
}

inline QMat5 exact_D(const QSqrt2& a, const QSqrt2& b, const QSqrt2& c) {
  QMat5 D = QMat5::zero();
  const QSqrt2 row[3] = {a, b, c};
  for (int k = 0; k < 3; ++k) {
    D(0, k + 2) = D(1, k + 2) = row[k];
    D(k + 2, 0) = D(k + 2, 1) = -row[k];
  }
  return D;
}

inline QMat5 exact_V(const QSqrt2& a) { return as_column({a, 0, 0, 0, -a}); }
inline QMat5 exact_W(const QSqrt2& a) { return as_column({a, a, 0, 0, 0}); }

struct DirectionRelation {
  std::string generator;
  std::optional<QSqrt2> eigenvalue;  // X v = eigenvalue * v, if any
};

/// X v for each generator, reported as an eigen-relation when there is one.
inline std::vector<DirectionRelation> direction_relations(const std::vector<std::string>& generators,
                                                         const QMat5& vector_column,
                                                         Branch branch = Branch::dS) {
  std::vector<DirectionRelation> out;
  for (const auto& name : generators) {
    const QMat5 xv = generator(name, branch).matrix * vector_column;
    out.push_back({name, proportionality(xv, vector_column)});
  }
  return out;
}

}  // namespace tpd
