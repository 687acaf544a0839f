#pragma once

#include <array>
#include <optional>
#include <string>

#include "akahler/geometry.hpp"
#include "akahler/theta.hpp"

namespace akahler {

// Dimension 4. Basis order of a J-basis: X, JX, Y, JY (indices 0..3) with
// g = diag(1, -1, 1, -1) and J the standard block structure.

namespace dim4 {

inline constexpr std::size_t X = 0, JX = 1, Y = 2, JY = 3;

inline RationalMatrix standard_metric() { return standard_neutral_metric(4); }
inline RationalMatrix standard_J() { return standard_complex_structure(4); }

inline LieAlgebra algebra_from(const std::map<std::pair<std::size_t, std::size_t>, Vector>& br) {
  return LieAlgebra::from_brackets(4, br);
}

}  // namespace dim4

/// mu_{a,b,eps}
inline AntiHermitianStructure make_family_case1(const Rational& a, const Rational& b, int eps) {
  if (a.is_zero() && b.is_zero()) throw DegenerateParameters("case-1 family needs (a, b) != (0, 0)");
  if (eps != 1 && eps != -1) throw DegenerateParameters("epsilon must be +1 or -1");
  const Rational e(eps), z;
  using namespace dim4;
  LieAlgebraDraft d(4);
  d.set_bracket(X, JX, {z, z, a, b});
  d.set_bracket(X, Y, {z, a, z, -e * b});
  d.set_bracket(X, JY, {-a, z, z, e * a});
  d.set_bracket(JX, Y, {z, b, e * b, z});
  d.set_bracket(JX, JY, {-b, z, -e * a, z});
  d.set_bracket(Y, JY, {e * b, -e * a, z, z});
  return {d.validate(), standard_metric(), standard_J()};
}

/// mu_{t1,t2,t3,t4}
inline AntiHermitianStructure make_family_case2(const Rational& t1, const Rational& t2, const Rational& t3,
                                                const Rational& t4) {
  if (t1.is_zero() && t2.is_zero() && t3.is_zero() && t4.is_zero())
    throw DegenerateParameters("case-2 family needs t != 0");
  using namespace dim4;
  const Vector v{t1, t2, t3, t4};
  const Vector w{-t2, t1, -t4, t3};
  LieAlgebraDraft d(4);
  d.set_bracket(X, Y, v);
  d.set_bracket(X, JY, w);
  d.set_bracket(JX, Y, w);
  d.set_bracket(JX, JY, Rational(-1) * v);
  return {d.validate(), standard_metric(), standard_J()};
}

inline AntiHermitianStructure make_family_case2(const std::array<Rational, 4>& t) {
  return make_family_case2(t[0], t[1], t[2], t[3]);
}

/// r_{-1,-1}: [e1,e2] = e2, [e1,e3] = -e3, [e1,e4] = -e4.
inline LieAlgebra r_minus1_minus1() {
  return dim4::algebra_from({{{0, 1}, {0, 1, 0, 0}}, {{0, 2}, {0, 0, -1, 0}}, {{0, 3}, {0, 0, 0, -1}}});
}

/// aff(C) as a real algebra: [e1,e3] = e3, [e1,e4] = e4, [e2,e3] = e4, [e2,e4] = -e3.
inline LieAlgebra aff_C_real() {
  return dim4::algebra_from({{{0, 2}, {0, 0, 1, 0}},
                             {{0, 3}, {0, 0, 0, 1}},
                             {{1, 2}, {0, 0, 0, 1}},
                             {{1, 3}, {0, 0, -1, 0}}});
}

struct IsomorphismChecks {
  std::optional<std::pair<RationalMatrix, RationalMatrix>> metrics;  ///< (g_src, g_dst)
  std::optional<std::pair<RationalMatrix, RationalMatrix>> complex_structures;  ///< (J_src, J_dst)
};

/// phi[x, y]_src = [phi x, phi y]_dst, phi invertible, and optionally
/// phi^t g_dst phi = g_src, phi J_src = J_dst phi.
inline bool verify_isomorphism(const RationalMatrix& phi, const LieAlgebra& src, const LieAlgebra& dst,
                               const IsomorphismChecks& opts = {}) {
  const std::size_t n = src.dim();
  if (dst.dim() != n || phi.rows() != n || phi.cols() != n)
    throw DimensionMismatch("isomorphism candidate has the wrong shape");
  if (determinant(phi).is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(phi * src.bracket_basis(i, j) == dst.bracket(phi.column(i), phi.column(j)))) return false;
  if (opts.metrics && !(phi.transpose() * opts.metrics->second * phi == opts.metrics->first)) return false;
  if (opts.complex_structures &&
      !(phi * opts.complex_structures->first == opts.complex_structures->second * phi))
    return false;
  return true;
}

/// Full (bracket, g, J) equivalence between two structures.
inline bool verify_equivalence(const RationalMatrix& phi, const AntiHermitianStructure& src,
                               const AntiHermitianStructure& dst) {
  return verify_isomorphism(phi, src.algebra(), dst.algebra(),
                            {std::pair{src.metric(), dst.metric()},
                             std::pair{src.complex_structure(), dst.complex_structure()}});
}

/// Printed isomorphism mu_{a,b,eps} -> r_{-1,-1}.
inline RationalMatrix printed_phi_case1(const Rational& a, const Rational& b, int eps) {
  const Rational e(eps), z, one(1);
  return {{-e * a, -e * b, b, -a}, {e * b, -e * a, a, b}, {z, -e, -one, z}, {e, z, z, -one}};
}

inline RationalMatrix printed_phi_case1_inverse(const Rational& a, const Rational& b, int eps) {
  const Rational e(eps), z, n2 = a * a + b * b;
  RationalMatrix m{{-e * a, e * b, z, e * n2}, {-e * b, -e * a, -e * n2, z}, {b, a, -n2, z}, {-a, b, z, -n2}};
  return (Rational(1) / (Rational(2) * n2)) * m;
}

/// Printed isomorphism mu_t -> aff(C)_R.
inline RationalMatrix printed_phi_case2(const std::array<Rational, 4>& t) {
  const auto& [t1, t2, t3, t4] = t;
  return {{t3, -t4, -t1, t2}, {t4, t3, -t2, -t1}, {-t1, -t2, -t3, -t4}, {t2, -t1, t4, -t3}};
}

struct NormalizedBasisCoefficients {
  Rational a, b, c, d;
  std::array<Rational, 8> t;  ///< t[0] = t1, ..., t[7] = t8
};

/// Coefficients read off a structure already in J-basis form.
inline NormalizedBasisCoefficients extract_coefficients(const LieAlgebra& l) {
  using namespace dim4;
  NormalizedBasisCoefficients k;
  const Vector xjx = l.bracket_basis(X, JX), xy = l.bracket_basis(X, Y), xjy = l.bracket_basis(X, JY),
               jxy = l.bracket_basis(JX, Y), yjy = l.bracket_basis(Y, JY);
  k.a = xjx[Y];
  k.b = xjx[JY];
  k.c = yjy[X];
  k.d = yjy[JX];
  k.t = {xy[X], xy[JX], xy[Y], xy[JY], xjy[Y], xjy[JY], jxy[X], jxy[JX]};
  return k;
}

/// The bracket table in J-basis form is exactly the one the coefficients
/// describe (all remaining coordinates forced by theta = 0).
inline bool coefficient_shape_holds(const LieAlgebra& l, const NormalizedBasisCoefficients& k) {
  using namespace dim4;
  const auto& t = k.t;
  const Rational z;
  return l.bracket_basis(X, JX) == Vector{z, z, k.a, k.b} && l.bracket_basis(X, Y) == Vector{t[0], t[1], t[2], t[3]} &&
         l.bracket_basis(X, JY) == Vector{-t[1], t[0], t[4], t[5]} &&
         l.bracket_basis(JX, Y) == Vector{t[6], t[7], -t[3], t[2]} &&
         l.bracket_basis(JX, JY) == Vector{-t[7], t[6], -t[5], t[4]} && l.bracket_basis(Y, JY) == Vector{k.c, k.d, z, z};
}

/// The twelve inner-product identities implied by theta(U, V, JV) = 0.
inline bool theta_identities_hold(const AntiHermitianStructure& s) {
  using namespace dim4;
  const auto& l = s.algebra();
  auto ip = [&](std::size_t i, std::size_t j, std::size_t k) {
    return s.inner(l.bracket_basis(i, j), basis_vector(4, k));
  };
  return ip(X, Y, X) == -ip(X, JY, JX) && ip(X, Y, JX) == ip(X, JY, X) && ip(X, Y, Y) == -ip(JX, Y, JY) &&
         ip(X, Y, JY) == ip(JX, Y, Y) && ip(X, JY, Y) == -ip(JX, JY, JY) && ip(X, JY, JY) == ip(JX, JY, Y) &&
         ip(JX, Y, X) == -ip(JX, JY, JX) && ip(JX, Y, JX) == ip(JX, JY, X) && ip(X, JX, X).is_zero() &&
         ip(X, JX, JX).is_zero() && ip(Y, JY, Y).is_zero() && ip(Y, JY, JY).is_zero();
}

inline bool abcd_relations_hold(const NormalizedBasisCoefficients& k) {
  const auto& t = k.t;
  return k.a == t[1] + t[6] && k.b == t[7] - t[0] && k.c == -(t[3] + t[4]) && k.d == t[2] - t[5];
}

/// The four Jacobi consequences with Delta(U, V) = [JU, V] - [U, JV].
inline bool parallel_relations_hold(const LieAlgebra& l, const NormalizedBasisCoefficients& k) {
  using namespace dim4;
  const auto& t = k.t;
  const Vector xjx = l.bracket_basis(X, JX), yjy = l.bracket_basis(Y, JY);
  const Vector dxy = l.bracket_basis(JX, Y) - l.bracket_basis(X, JY);
  const Vector dxjy = l.bracket_basis(JX, JY) + l.bracket_basis(X, Y);
  auto combo = [&](const Rational& p, const Rational& q, const Rational& r, const Rational& u) {
    return is_zero(p * xjx + q * yjy + r * dxy + u * dxjy);
  };
  return combo(-(t[7] + t[0]), -k.b, t[2], t[3]) && combo(t[1] - t[6], k.a, t[4], t[5]) &&
         combo(-k.d, t[2] + t[5], -t[0], t[1]) && combo(-k.c, t[3] - t[4], t[6], -t[7]);
}

using MatrixA = RationalMatrix;

inline MatrixA matrix_A(const NormalizedBasisCoefficients& k) {
  const Rational z;
  return {{z, k.c, k.a, -k.b}, {z, k.d, k.b, k.a}, {k.a, z, k.c, k.d}, {k.b, z, k.d, -k.c}};
}

/// Basis change P (columns X, JX, Y, JY) to a J-basis with g = diag(1,-1,1,-1).
/// Exact over Q: needs a null vector of the complexified form with
/// coordinates in Q(i).
inline RationalMatrix normalizing_basis(const AntiHermitianStructure& s) {
  if (s.dim() != 4) throw DimensionMismatch("normalization is implemented for dimension 4");
  if (s.metric() == dim4::standard_metric() && s.complex_structure() == dim4::standard_J())
    return RationalMatrix::identity(4);

  const ComplexifiedForm f(s);
  const RationalMatrix& j = s.complex_structure();
  const Vector u1 = basis_vector(4, 0);
  Vector u2;
  for (std::size_t k = 1; k < 4; ++k) {
    const Vector cand = basis_vector(4, k);
    const std::vector<Vector> cols{u1, j * u1, cand};
    if (rank(RationalMatrix::from_columns(cols)) == 3) {
      u2 = cand;
      break;
    }
  }
  const GaussianRational s11 = f(u1, u1), s12 = f(u1, u2), s22 = f(u2, u2);
  const auto root = exact_sqrt(s12 * s12 - s11 * s22);
  if (!root)
    throw NormalizationFailed(
        "no J-basis with rational coordinates exists for this metric; supply the structure in a basis "
        "X, JX, Y, JY with g = diag(1,-1,1,-1)");

  auto combine = [&](const GaussianRational& p, const GaussianRational& q) {
    return f.scale(p, u1) + f.scale(q, u2);
  };
  Vector n1, n2;
  if (!s11.is_zero()) {
    n1 = combine((-s12 + *root) / s11, GaussianRational(1));
    n2 = combine((-s12 - *root) / s11, GaussianRational(1));
  } else {
    n1 = u1;
    n2 = combine(-s22, GaussianRational(2) * s12);
  }
  n2 = f.scale(f(n1, n2).inverse(), n2);

  const Rational half(1, 2);
  const Vector x = n1 + half * n2;
  const Vector y = f.scale(GaussianRational::i(), n1 - half * n2);
  const std::vector<Vector> cols{x, j * x, y, j * y};
  return RationalMatrix::from_columns(cols);
}

enum class Dim4Class { abelian, r_minus1_minus1, aff_C };

inline std::string to_string(Dim4Class c) {
  switch (c) {
    case Dim4Class::abelian: return "abelian";
    case Dim4Class::r_minus1_minus1: return "r_{-1,-1}";
    case Dim4Class::aff_C: return "aff(C)_R";
  }
  return "?";
}

inline LieAlgebra canonical_algebra(Dim4Class c) {
  switch (c) {
    case Dim4Class::abelian: return LieAlgebra::abelian(4);
    case Dim4Class::r_minus1_minus1: return r_minus1_minus1();
    case Dim4Class::aff_C: return aff_C_real();
  }
  return LieAlgebra::abelian(4);
}

/// zeta = z1^2 + z2^2 with z1 = t1 + i t2, z2 = t3 + i t4.
inline GaussianRational zeta_of(const std::array<Rational, 4>& t) {
  const GaussianRational z1(t[0], t[1]), z2(t[2], t[3]);
  return z1 * z1 + z2 * z2;
}

struct CurvatureSummary {
  bool flat = false;
  bool ricci_flat = false;
  bool einstein = false;
  std::optional<Rational> lambda;
};

inline CurvatureSummary summarize_curvature(const AntiHermitianStructure& s) {
  const Connection c = levi_civita(s);
  const CurvatureTensor r = curvature(s, c);
  const Ricci ric = ricci(s, r);
  const EinsteinResult e = einstein(s, ric);
  return {r.is_zero(), ric.form.is_zero(), e.einstein, e.lambda};
}

struct ClassificationReport {
  Dim4Class verdict = Dim4Class::abelian;
  std::optional<RationalMatrix> witness;  ///< maps the input algebra onto canonical_algebra(verdict)
  bool witness_verified = false;
  std::optional<GaussianRational> zeta;
  std::optional<int> epsilon;
  std::size_t rank_A = 0;
  std::optional<RationalMatrix> basis;  ///< normalizing basis, columns X, JX, Y, JY
  std::optional<NormalizedBasisCoefficients> coefficients;
  bool identities_hold = true;   ///< theta identities, coefficient shape, abcd, Jacobi relations
  bool case_relations_hold = true;
  bool family_match = true;      ///< normalized algebra equals the family member
  std::size_t derived_dimension = 0;
  bool discriminator_agrees = false;
  CurvatureSummary curvature;
};

namespace detail {

inline std::optional<Rational> ratio_if_parallel(const Vector& num, const Vector& den) {
  std::optional<Rational> r;
  for (std::size_t i = 0; i < den.size(); ++i)
    if (!den[i].is_zero()) {
      r = num[i] / den[i];
      break;
    }
  if (!r || !(num == *r * den)) return std::nullopt;
  return r;
}

inline std::size_t expected_derived_dim(Dim4Class c) {
  switch (c) {
    case Dim4Class::abelian: return 0;
    case Dim4Class::r_minus1_minus1: return 3;
    case Dim4Class::aff_C: return 2;
  }
  return 0;
}

}  // namespace detail

inline ClassificationReport classify(const AntiHermitianStructure& s) {
  if (s.dim() != 4) throw DimensionMismatch("classification is implemented for dimension 4");
  if (!is_anti_kahler(s)) throw NotAntiKahler("structure is not anti-Kahler");

  ClassificationReport rep;
  rep.derived_dimension = derived_dim(s.algebra());
  rep.curvature = summarize_curvature(s);

  if (s.algebra().is_abelian()) {
    rep.verdict = Dim4Class::abelian;
    rep.witness = RationalMatrix::identity(4);
  } else {
    const RationalMatrix p = normalizing_basis(s);
    const AntiHermitianStructure ns = s.transport(p);
    const LieAlgebra& l = ns.algebra();
    const NormalizedBasisCoefficients k = extract_coefficients(l);
    rep.basis = p;
    rep.coefficients = k;
    rep.identities_hold = theta_identities_hold(ns) && coefficient_shape_holds(l, k) && abcd_relations_hold(k) &&
                          parallel_relations_hold(l, k);
    const MatrixA a = matrix_A(k);
    rep.rank_A = rank(a);
    const RationalMatrix pinv = invert(p);
    const auto& t = k.t;

    if (!a.is_zero()) {
      rep.verdict = Dim4Class::r_minus1_minus1;
      const Vector v1{-t[0] - t[7], t[0] - t[7], t[2], t[3]};
      const Vector v2{t[1] - t[6], t[1] + t[6], t[4], t[5]};
      const Vector v3{t[5] - t[2], t[2] + t[5], -t[0], t[1]};
      const Vector v4{t[3] + t[4], t[3] - t[4], t[6], -t[7]};
      const auto e = !is_zero(v1) ? detail::ratio_if_parallel(v4, v1) : detail::ratio_if_parallel(v3, v2);
      int eps = 0;
      if (e && (*e == Rational(1) || *e == Rational(-1))) eps = e->sign();
      rep.case_relations_hold = eps != 0 && t[0].is_zero() && t[2].is_zero() && t[4].is_zero() && t[6].is_zero() &&
                                k.c == Rational(eps) * k.b && k.d == Rational(-eps) * k.a;
      if (eps != 0) {
        rep.epsilon = eps;
        rep.family_match = l == make_family_case1(k.a, k.b, eps).algebra();
        rep.witness = printed_phi_case1(k.a, k.b, eps) * pinv;
      } else {
        rep.family_match = false;
      }
    } else {
      rep.verdict = Dim4Class::aff_C;
      const std::array<Rational, 4> tt{t[0], t[1], t[2], t[3]};
      rep.case_relations_hold = t[4] == -t[3] && t[5] == t[2] && t[6] == -t[1] && t[7] == t[0];
      rep.family_match = l == make_family_case2(tt).algebra();
      rep.zeta = zeta_of(tt);
      rep.witness = printed_phi_case2(tt) * pinv;
    }
  }
  if (rep.witness) rep.witness_verified = verify_isomorphism(*rep.witness, s.algebra(), canonical_algebra(rep.verdict));
  rep.discriminator_agrees = rep.derived_dimension == detail::expected_derived_dim(rep.verdict);
  return rep;
}

// ---- equivalence (moduli) ----

/// Printed equivalence mu_{1,0,+1} -> mu_{a,b,eps} (r = a^2+b^2+1, s = a^2+b^2-1).
inline RationalMatrix printed_equivalence_case1(const Rational& a, const Rational& b, int eps) {
  if (a.is_zero() && b.is_zero()) throw DegenerateParameters("case-1 family needs (a, b) != (0, 0)");
  const Rational e(eps), n2 = a * a + b * b, r = n2 + Rational(1), s = n2 - Rational(1);
  RationalMatrix m{{e * r * a, e * s * b, e * r * b, -e * s * a},
                   {-e * s * b, e * r * a, e * s * a, e * r * b},
                   {-r * b, s * a, r * a, s * b},
                   {-s * a, -r * b, -s * b, r * a}};
  return (Rational(1) / (Rational(2) * n2)) * m;
}

inline RationalMatrix printed_equivalence_case1_inverse(const Rational& a, const Rational& b, int eps) {
  const Rational e(eps), n2 = a * a + b * b, r = n2 + Rational(1), s = n2 - Rational(1);
  RationalMatrix m{{e * r * a, e * s * b, -r * b, s * a},
                   {-e * s * b, e * r * a, -s * a, -r * b},
                   {e * r * b, -e * s * a, r * a, s * b},
                   {e * s * a, e * r * b, -s * b, r * a}};
  return (Rational(1) / (Rational(2) * n2)) * m;
}

/// Real 4x4 form of a complex 2x2 matrix acting on span_C{X, Y}.
inline RationalMatrix realify2(const GaussianRational& m00, const GaussianRational& m01, const GaussianRational& m10,
                               const GaussianRational& m11) {
  ComplexMatrix c{{m00, m01}, {m10, m11}};
  return realify(c);
}

/// Complex orthogonal maps of span_C{X, Y}: Cayley transform
/// (I - K)(I + K)^{-1}, K = [[0, k], [-k, 0]], times an optional reflection.
inline RationalMatrix cayley_orthogonal(const GaussianRational& k, bool reflect) {
  const GaussianRational one(1), den = one + k * k;
  if (den.is_zero()) throw Singular("Cayley parameter k^2 = -1");
  const GaussianRational c = (one - k * k) / den, sn = (GaussianRational(2) * k) / den;
  const GaussianRational sign = reflect ? GaussianRational(-1) : one;
  return realify2(c, GaussianRational(Rational(0)) - sign * sn, sn, sign * c);
}

struct EquivalenceWitness {
  RationalMatrix matrix;
  std::string source;  ///< "printed" or "derived-search"
};

/// Search the Cayley parametrization of O(2, C) over Gaussian rationals with
/// numerators in [-bound, bound] and denominators in [1, bound].
inline std::optional<RationalMatrix> search_equivalence(const AntiHermitianStructure& src,
                                                        const AntiHermitianStructure& dst, long bound = 4) {
  std::vector<Rational> grid;
  for (long den = 1; den <= bound; ++den)
    for (long num = -bound; num <= bound; ++num) {
      const Rational q(num, den);
      if (std::find(grid.begin(), grid.end(), q) == grid.end()) grid.push_back(q);
    }
  for (bool reflect : {false, true})
    for (const auto& re : grid)
      for (const auto& im : grid) {
        const GaussianRational k(re, im);
        if ((GaussianRational(1) + k * k).is_zero()) continue;
        for (int sign : {1, -1}) {
          const RationalMatrix w = Rational(sign) * cayley_orthogonal(k, reflect);
          if (verify_equivalence(w, src, dst)) return w;
        }
      }
  return std::nullopt;
}

inline EquivalenceWitness equivalence_witness_case1(const Rational& a, const Rational& b, int eps) {
  const AntiHermitianStructure src = make_family_case1(Rational(1), Rational(0), 1);
  const AntiHermitianStructure dst = make_family_case1(a, b, eps);
  RationalMatrix w = printed_equivalence_case1(a, b, eps);
  if (verify_equivalence(w, src, dst)) return {std::move(w), "printed"};
  if (auto found = search_equivalence(src, dst)) return {std::move(*found), "derived-search"};
  throw DegenerateParameters("no equivalence witness found for (" + a.str() + ", " + b.str() + ", " +
                             std::to_string(eps) + ")");
}

inline GaussianRational orbit_invariant(const AntiHermitianStructure& s) {
  const auto k = extract_coefficients(s.transport(normalizing_basis(s)).algebra());
  return zeta_of({k.t[0], k.t[1], k.t[2], k.t[3]});
}

namespace detail {

/// Complex 2x2 with columns u, v (as pairs of complex coordinates on X, Y).
inline ComplexMatrix columns2(const std::array<GaussianRational, 2>& u, const std::array<GaussianRational, 2>& v) {
  return {{u[0], v[0]}, {u[1], v[1]}};
}

inline ComplexMatrix conjugate_diag(const ComplexMatrix& basis, const GaussianRational& d0, const GaussianRational& d1) {
  ComplexMatrix d{{d0, GaussianRational()}, {GaussianRational(), d1}};
  return basis * d * invert(basis);
}

/// psi: X + sigma iY -> z (X + sigma iY), X - sigma iY -> (X - sigma iY) / z.
inline RationalMatrix psi(const GaussianRational& z, int sigma) {
  const GaussianRational si(Rational(0), Rational(sigma));
  const GaussianRational one(1);
  const ComplexMatrix b = columns2({one, si}, {one, GaussianRational() - si});
  const ComplexMatrix m = conjugate_diag(b, z, z.inverse());
  return realify(m);
}

}  // namespace detail

/// Printed map [[0, -1], [1, 0]] on the null basis {X + iY, X - iY}.
inline RationalMatrix printed_phi_o() {
  const GaussianRational one(1), i = GaussianRational::i(), zero;
  const ComplexMatrix b = detail::columns2({one, i}, {one, zero - i});
  const ComplexMatrix rot{{zero, zero - one}, {one, zero}};
  return realify(b * rot * invert(b));
}

/// Witness of an equivalence mu_t -> mu_t' when zeta(t) = zeta(t'); empty
/// otherwise. Every returned witness has passed verify_equivalence.
inline std::optional<RationalMatrix> equivalent_case2(const std::array<Rational, 4>& t,
                                                      const std::array<Rational, 4>& tp) {
  const AntiHermitianStructure src = make_family_case2(t), dst = make_family_case2(tp);
  const GaussianRational zeta = zeta_of(t);
  if (!(zeta == zeta_of(tp))) return std::nullopt;
  const GaussianRational z1(t[0], t[1]), z2(t[2], t[3]), w1(tp[0], tp[1]), w2(tp[2], tp[3]);
  RationalMatrix w;
  if (!zeta.is_zero()) {
    // z -> w and (-z2, z1) -> (-w2, w1); determinant one
    const GaussianRational zero;
    const ComplexMatrix zm = detail::columns2({z1, z2}, {zero - z2, z1});
    const ComplexMatrix wm = detail::columns2({w1, w2}, {zero - w2, w1});
    w = realify(wm * invert(zm));
  } else {
    // z = z1 (1, sigma i)
    const GaussianRational i = GaussianRational::i();
    const int sigma = (z2 / (i * z1)).re().sign();
    const int sigma_p = (w2 / (i * w1)).re().sign();
    w = detail::psi(w1, sigma_p) * invert(detail::psi(z1, sigma));
    if (sigma != sigma_p) {
      const Rational one(1), m1(-1);
      const std::vector<Rational> d{one, one, m1, m1};
      const RationalMatrix flip = RationalMatrix::diagonal(d);
      w = detail::psi(w1, sigma_p) * invert(detail::psi(GaussianRational(-1), sigma_p)) * flip *
          invert(detail::psi(z1, sigma));
    }
  }
  if (!verify_equivalence(w, src, dst)) return std::nullopt;
  return w;
}

struct ClosedFormCurvature {
  GaussianRational zeta;
  RationalMatrix H;
  RationalMatrix ricci_operator;              ///< -2 diag(H, H)
  std::vector<RationalMatrix> curvature_ops;  ///< R(e_i, e_j) at index 4 i + j
  bool flat = false;
  bool einstein = false;
  std::optional<Rational> lambda;
};

inline ClosedFormCurvature closed_form_curvature_case2(const std::array<Rational, 4>& t) {
  ClosedFormCurvature out;
  out.zeta = zeta_of(t);
  const Rational re = out.zeta.re(), im = out.zeta.im(), z;
  out.H = RationalMatrix{{re, -im}, {im, re}};
  out.ricci_operator = RationalMatrix{{re, -im, z, z}, {im, re, z, z}, {z, z, re, -im}, {z, z, im, re}};
  out.ricci_operator *= Rational(-2);
  // R(X, Y) = [[0, -H], [H, 0]] on the blocks (X, JX | Y, JY)
  const RationalMatrix m{{z, z, -re, im}, {z, z, -im, -re}, {re, -im, z, z}, {im, re, z, z}};
  const RationalMatrix jm = dim4::standard_J() * m;
  out.curvature_ops.assign(16, RationalMatrix(4, 4));
  auto put = [&](std::size_t i, std::size_t j, const RationalMatrix& r) {
    out.curvature_ops[4 * i + j] = r;
    out.curvature_ops[4 * j + i] = -r;
  };
  using namespace dim4;
  put(X, Y, m);
  put(X, JY, jm);
  put(JX, Y, jm);
  put(JX, JY, -m);
  out.flat = out.zeta.is_zero();
  out.einstein = im.is_zero();
  if (out.einstein) out.lambda = Rational(-2) * re;
  return out;
}

/// Closed form equals the general engine on mu_t.
inline bool closed_form_agrees_with_engine(const std::array<Rational, 4>& t) {
  const AntiHermitianStructure s = make_family_case2(t);
  const ClosedFormCurvature cf = closed_form_curvature_case2(t);
  const Connection c = levi_civita(s);
  const CurvatureTensor r = curvature(s, c);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(r.op(i, j) == cf.curvature_ops[4 * i + j])) return false;
  const Ricci ric = ricci(s, r);
  const EinsteinResult e = einstein(s, ric);
  return ric.operator_ == cf.ricci_operator && r.is_zero() == cf.flat && e.einstein == cf.einstein &&
         e.lambda == cf.lambda;
}

}  // namespace akahler
