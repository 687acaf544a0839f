#pragma once

// Tablewise identities relating the connection, J and the bracket. Each
// returns true iff the identity holds exactly on every basis pair/triple.

#include "akahler/geometry.hpp"

namespace akahler {

/// g(nabla_x y, z) + g(y, nabla_x z) = 0.
inline bool is_metric_compatible(const AntiHermitianStructure& s, const Connection& c) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!(c.op(i).transpose() * s.metric() + s.metric() * c.op(i)).is_zero()) return false;
  return true;
}

/// nabla_x y - nabla_y x = [x, y].
inline bool is_torsion_free(const AntiHermitianStructure& s, const Connection& c) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!(c.christoffel().fiber(i, j) - c.christoffel().fiber(j, i) == s.algebra().bracket_basis(i, j))) return false;
  return true;
}

/// Each nabla_{e_i} J is g-symmetric.
inline bool nabla_J_is_symmetric(const AntiHermitianStructure& s, const Connection& c) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix m = nabla_J_op(s, c, basis_vector(n, i));
    if (!(m.transpose() * s.metric() == s.metric() * m)) return false;
  }
  return true;
}

/// (nabla_{Jx} J) y = eps J (nabla_x J) y.
inline bool is_epsilon_parallel(const AntiHermitianStructure& s, const Connection& c, int eps) {
  const std::size_t n = s.dim();
  const RationalMatrix& j = s.complex_structure();
  const Rational e(eps);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = basis_vector(n, i);
    if (!(nabla_J_op(s, c, j * x) == e * (j * nabla_J_op(s, c, x)))) return false;
  }
  return true;
}

/// nabla_{Jx} y = eps J nabla_x y.
inline bool connection_J_relation(const AntiHermitianStructure& s, const Connection& c, int eps) {
  const std::size_t n = s.dim();
  const RationalMatrix& j = s.complex_structure();
  const Rational e(eps);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = basis_vector(n, i);
    if (!(c.op(j * x) == e * (j * c.op(x)))) return false;
  }
  return true;
}

/// nabla_x y = 1/2 ([x, y] - J[x, Jy]).
inline bool matches_abelian_connection_formula(const AntiHermitianStructure& s, const Connection& c) {
  const std::size_t n = s.dim();
  const auto& l = s.algebra();
  const RationalMatrix& j = s.complex_structure();
  const Rational half(1, 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector x = basis_vector(n, a), y = basis_vector(n, b);
      const Vector expected = half * (l.bracket(x, y) - j * l.bracket(x, j * y));
      if (!(c.christoffel().fiber(a, b) == expected)) return false;
    }
  return true;
}

/// nabla_{e_i} nabla_{e_j} = nabla_{e_j} nabla_{e_i}.
inline bool covariant_derivatives_commute(const Connection& c) {
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j)
      if (!(c.op(i) * c.op(j) == c.op(j) * c.op(i))) return false;
  return true;
}

/// B(Jx, Jy) = -B(x, y).
inline bool killing_is_J_anti_invariant(const AntiHermitianStructure& s) {
  const RationalMatrix b = killing_form(s.algebra());
  const RationalMatrix& j = s.complex_structure();
  return j.transpose() * b * j == -b;
}

/// [J[x, y], z] = J[[x, y], z].
inline bool derived_bracket_commutes_with_J(const AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  const auto& l = s.algebra();
  const RationalMatrix& j = s.complex_structure();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector xy = l.bracket_basis(a, b);
      if (is_zero(xy)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const Vector z = basis_vector(n, c);
        if (!(l.bracket(j * xy, z) == j * l.bracket(xy, z))) return false;
      }
    }
  return true;
}

/// R(Je_i, Je_j) = -R(e_i, e_j) as operators.
inline bool curvature_is_J_anti_invariant(const AntiHermitianStructure& s, const CurvatureTensor& r) {
  const std::size_t n = s.dim();
  const RationalMatrix& j = s.complex_structure();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!(r.op(j.column(a), j.column(b)) == -r.op(a, b))) return false;
  return true;
}

/// R(x, y) z = -1/4 [[x, y], z].
inline bool matches_bi_invariant_curvature(const AntiHermitianStructure& s, const CurvatureTensor& r) {
  const std::size_t n = s.dim();
  const auto& l = s.algebra();
  const Rational quarter(-1, 4);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const RationalMatrix expected = quarter * l.ad(l.bracket_basis(a, b));
      if (!(r.op(a, b) == expected)) return false;
    }
  return true;
}

}  // namespace akahler
