#pragma once

// Bracket tables of the two rank-7 subalgebras and the subgroup catalog.

#include <optional>
#include <string>
#include <vector>

#include "tpd/core/nullspace.hpp"
#include "tpd/lie/generators.hpp"

namespace tpd {

enum class RelationStatus { pass, flagged, fail };

inline std::string to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::pass: return "pass";
    case RelationStatus::flagged: return "flagged";
    default: return "fail";
  }
}

// [lhs, rhs] = coefficient * result, with an empty result meaning 0.
struct Relation {
  std::string lhs;
  std::string rhs;
  int coefficient = 1;
  std::string result;
};

struct RelationCheck {
  Relation relation;
  RelationStatus status;
  std::string multiplier;  // actual = multiplier * stated, when proportional
  std::string actual;      // M-basis expansion of the computed bracket
};

struct TableReport {
  std::string name;
  std::vector<RelationCheck> checks;

  std::size_t count(RelationStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
};

inline std::string expansion_string(const QMat5& x, Branch branch = Branch::dS) {
  const auto c = m_coordinates(x, branch);
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [ab, v] : c) {
    if (!s.empty()) s += " + ";
    s += "(" + v.str() + ")*M" + std::to_string(ab.first) + std::to_string(ab.second);
  }
  return s;
}

/// Computes [lhs, rhs] and compares it with the stated right side.
inline RelationCheck check_relation(const Relation& r, Branch branch = Branch::dS) {
  const QMat5 actual = bracket(generator(r.lhs, branch).matrix, generator(r.rhs, branch).matrix);
  RelationCheck out{r, RelationStatus::fail, "", expansion_string(actual, branch)};
  if (r.result.empty() || r.coefficient == 0) {
    const bool zero = actual == QMat5::zero();
    out.status = zero ? RelationStatus::pass : RelationStatus::fail;
    out.multiplier = zero ? "1" : "";
    return out;
  }
  const QMat5 stated = QSqrt2(r.coefficient) * generator(r.result, branch).matrix;
  const auto m = proportionality(actual, stated);
  if (!m || m->is_zero()) return out;
  out.multiplier = m->str();
  out.status = *m == QSqrt2(1) ? RelationStatus::pass : RelationStatus::flagged;
  return out;
}

namespace detail {

inline std::string with_sign(const std::string& base, int sign) { return base + (sign > 0 ? "+" : "-"); }

}  // namespace detail

/// The Type I relations for sign s. Indices i, j run over {2, 3} with eps_23 = 1.
inline std::vector<Relation> type_one_relations(int s) {
  using detail::with_sign;
  std::vector<Relation> rel;
  const std::string P = with_sign("P", s);
  auto K = [&](int i) { return with_sign("K" + std::to_string(i), s); };
  auto J = [](int i) { return "J" + std::to_string(i); };
  auto eps = [](int i, int j) { return i == j ? 0 : (i == 2 ? 1 : -1); };
  for (int i : {2, 3})
    for (int j : {2, 3}) {
      if (i < j) rel.push_back({K(i), K(j), 0, ""});
      if (i != j) rel.push_back({J(i), J(j), eps(i, j), "T"});
      rel.push_back({K(i), J(j), i == j ? 1 : 0, i == j ? P : ""});
    }
  for (int i : {2, 3}) {
    const int j = i == 2 ? 3 : 2;
    rel.push_back({K(i), P, 0, ""});
    rel.push_back({K(i), "R", -1, K(i)});
    rel.push_back({K(i), "T", eps(i, j), K(j)});
    rel.push_back({J(i), P, 1, K(i)});
    rel.push_back({J(i), "R", 0, ""});
    rel.push_back({J(i), "T", eps(i, j), J(j)});
  }
  rel.push_back({P, "R", -s, P});
  rel.push_back({P, "T", 0, ""});
  rel.push_back({"R", "T", 0, ""});
  return rel;
}

/// The Type II relations for sign s (i, j, k in 1..3).
inline std::vector<Relation> type_two_relations(int s) {
  using detail::with_sign;
  std::vector<Relation> rel;
  auto F = [&](int i) { return with_sign("F" + std::to_string(i), s); };
  auto L = [](int i) { return "L" + std::to_string(i); };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const int k = 6 - i - j;
      const int e = (i == j) ? 0 : levi_civita(i - 1, j - 1, k - 1);
      if (i < j) rel.push_back({F(i), F(j), 0, ""});
      if (i < j) rel.push_back({L(i), L(j), -e, L(k)});
      rel.push_back({F(i), L(j), -e, e == 0 ? "" : F(k)});
    }
  for (int i = 1; i <= 3; ++i) {
    rel.push_back({F(i), "J0", s, F(i)});
    rel.push_back({L(i), "J0", 0, ""});
  }
  return rel;
}

/// "TypeI" or "TypeII" with sign s.
inline TableReport verify_bracket_table(const std::string& type, int s, Branch branch = Branch::dS) {
  if (s != 1 && s != -1) throw InvalidInput("verify_bracket_table: sign must be +1 or -1");
  std::vector<Relation> rel;
  if (type == "TypeI") rel = type_one_relations(s);
  else if (type == "TypeII") rel = type_two_relations(s);
  else throw InvalidInput("verify_bracket_table: unknown table " + type);
  TableReport rep{type + (s > 0 ? "+" : "-"), {}};
  for (const auto& r : rel) rep.checks.push_back(check_relation(r, branch));
  return rep;
}

/// Pairs (M_AB, M_CD), A<B, C<D, for which the bracket differs from
///   eta_AD M_BC + eta_BC M_AD - eta_AC M_BD - eta_BD M_AC.
/// Returns {pairs checked, mismatches}.
inline std::pair<std::size_t, std::size_t> bracket_display_mismatches(Branch branch = Branch::dS) {
  const QMat5 e = algebra_metric(branch);
  std::vector<std::pair<int, int>> basis;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) basis.emplace_back(a, b);
  std::size_t pairs = 0, bad = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto [a, b] = basis[i];
      const auto [c, d] = basis[j];
      auto M = [&](int x, int y) { return basis_M(x, y, branch); };
      const QMat5 display = e(a, d) * M(b, c) + e(b, c) * M(a, d) - e(a, c) * M(b, d) - e(b, d) * M(a, c);
      ++pairs;
      bad += !(bracket(M(a, b), M(c, d)) == display);
    }
  return {pairs, bad};
}

// Printed generator matrix vs the definitional one: the exact multiplier.
struct PrintedComparison {
  std::string name;
  std::optional<QSqrt2> multiplier;  // printed = multiplier * definitional
};

inline std::vector<PrintedComparison> compare_printed_generators() {
  std::vector<PrintedComparison> out;
  for (const auto& n : printed_generator_names())
    out.push_back({n, proportionality(printed_generator(n), generator(n).matrix)});
  return out;
}

struct SubalgebraSpec {
  std::string name;
  int sign = 1;
  std::vector<std::string> generators;
};

/// Subalgebra by name: TypeI, TypeII, H1..H8, K1..K5, "full", or "K1-translations"
/// (an alias of K1). The unsigned P of the H family takes p_sign, which
/// defaults to the sign of the K generators.
inline SubalgebraSpec subalgebra(const std::string& name, int sign = 1, std::optional<int> p_sign = {}) {
  if (sign != 1 && sign != -1) throw InvalidInput("subalgebra: sign must be +1 or -1");
  const int ps = p_sign.value_or(sign);
  if (ps != 1 && ps != -1) throw InvalidInput("subalgebra: P sign must be +1 or -1");
  const std::string sg = sign > 0 ? "+" : "-";
  const std::string K2 = "K2" + sg, K3 = "K3" + sg, P = std::string("P") + (ps > 0 ? "+" : "-");
  const std::string F1 = "F1" + sg, F2 = "F2" + sg, F3 = "F3" + sg;
  SubalgebraSpec s{name, sign, {}};
  if (name == "TypeI") s.generators = {K2, K3, "J2", "J3", std::string("P") + sg, "R", "T"};
  else if (name == "TypeII") s.generators = {F1, F2, F3, "L1", "L2", "L3", "J0"};
  else if (name == "H1") s.generators = {K2, K3, P};
  else if (name == "H2") s.generators = {K2, K3, P, "R"};
  else if (name == "H3") s.generators = {K2, K3, P, "T"};
  else if (name == "H4") s.generators = {K2, K3, P, "R", "T"};
  else if (name == "H5") s.generators = {P, "R", "T"};
  else if (name == "H6") s.generators = {"J2", "J3", "T"};
  else if (name == "H7") s.generators = {"J2", "J3", "R", "T"};
  else if (name == "H8") s.generators = {K2, K3, P, "J2", "J3", "T"};
  else if (name == "K1" || name == "K1-translations") s.generators = {F1, F2, F3};
  else if (name == "K2") s.generators = {"L1", "L2", "L3"};
  else if (name == "K3") s.generators = {F1, F2, F3, "J0"};
  else if (name == "K4") s.generators = {"L1", "L2", "L3", "J0"};
  else if (name == "K5") s.generators = {F1, F2, F3, "L1", "L2", "L3"};
  else if (name == "full") {
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) s.generators.push_back("M" + std::to_string(a) + std::to_string(b));
  } else {
    throw InvalidInput("unknown subalgebra: " + name);
  }
  return s;
}

inline std::vector<std::string> subalgebra_names() {
  return {"TypeI", "TypeII", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "K1", "K2", "K3", "K4", "K5", "full"};
}

inline std::vector<QMat5> generator_matrices(const SubalgebraSpec& spec, Branch branch = Branch::dS) {
  std::vector<QMat5> out;
  for (const auto& g : spec.generators) out.push_back(generator(g, branch).matrix);
  return out;
}

namespace detail {

inline std::vector<QSqrt2> flatten(const QMat5& m) { return {m.a.begin(), m.a.end()}; }

}  // namespace detail

// Dimension of the linear span of a set of matrices.
inline std::size_t span_dimension(const std::vector<QMat5>& ms) {
  DynMatrix<QSqrt2> m;
  for (const auto& x : ms) m.append_row(detail::flatten(x));
  return ms.empty() ? 0 : rank(m);
}

/// True when every pairwise bracket lies in the span of the generators.
inline bool is_closed(const SubalgebraSpec& spec, Branch branch = Branch::dS) {
  const auto gens = generator_matrices(spec, branch);
  const std::size_t d = span_dimension(gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto ext = gens;
      ext.push_back(bracket(gens[i], gens[j]));
      if (span_dimension(ext) != d) return false;
    }
  return true;
}

}  // namespace tpd
