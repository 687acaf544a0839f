#include <gtest/gtest.h>

#include "akahler/catalog.hpp"
#include "akahler/properties.hpp"
#include "akahler/random.hpp"
#include "oracles.hpp"

using namespace akahler;

namespace {

Vector e(std::size_t n, std::size_t k) { return basis_vector(n, k); }

void expect_connection_matches_oracle(const AntiHermitianStructure& s) {
  const Connection c = levi_civita(s);
  const Tensor3& g = c.christoffel();
  const oracle::Table3 o = oracle::christoffel(s);
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(g(i, j, k).value(), o[i][j][k]) << i << j << k;
}

void expect_ricci_matches_oracle(const AntiHermitianStructure& s) {
  const RationalMatrix rc = ricci(s, levi_civita(s)).form;
  const oracle::Mat o = oracle::ricci(s);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) ASSERT_EQ(rc(i, j).value(), o[i][j]);
}

AntiHermitianStructure heisenberg_standard() {
  return {LieAlgebra::from_brackets(4, {{{0, 1}, e(4, 2)}}), standard_neutral_metric(4), standard_complex_structure(4)};
}

}  // namespace

TEST(Structure, ConstructionValidates) {
  const LieAlgebra l = LieAlgebra::abelian(4);
  const RationalMatrix j = standard_complex_structure(4);
  EXPECT_THROW(AntiHermitianStructure(l, RationalMatrix::identity(4), j), NotAntiIsometry);
  EXPECT_THROW(AntiHermitianStructure(l, standard_neutral_metric(4), RationalMatrix::identity(4)), BadJSquare);
  EXPECT_THROW(AntiHermitianStructure(l, RationalMatrix(4, 4), j), SingularMetric);
  RationalMatrix asym = standard_neutral_metric(4);
  asym(0, 1) = Rational(1);
  EXPECT_THROW(AntiHermitianStructure(l, asym, j), NotSymmetric);
  EXPECT_THROW(AntiHermitianStructure(LieAlgebra::abelian(6), standard_neutral_metric(4), j), DimensionMismatch);
}

TEST(Structure, ComplexifiedForm) {
  const AntiHermitianStructure s{LieAlgebra::abelian(4), standard_neutral_metric(4), standard_complex_structure(4)};
  const ComplexifiedForm f = complexify(s);
  EXPECT_EQ(f(e(4, 0), e(4, 0)), GaussianRational(1));
  EXPECT_EQ(f(e(4, 2), e(4, 2)), GaussianRational(1));
  EXPECT_TRUE(f(e(4, 0), e(4, 2)).is_zero());
  const auto n7 = catalog::n7();
  EXPECT_EQ(complexify(n7)(e(6, 0), e(6, 4)).re(), Rational(1, 2));
  Rng rng(3, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Vector v(6), w(6);
    for (auto& x : v) x = rng.rational();
    for (auto& x : w) x = rng.rational();
    const ComplexifiedForm g = complexify(n7);
    EXPECT_EQ(g(n7.complex_structure() * v, w), GaussianRational::i() * g(v, w));
    EXPECT_EQ(g(v, w), g(w, v));
  }
}

TEST(Structure, TwinMetric) {
  const AntiHermitianStructure s{LieAlgebra::abelian(4), standard_neutral_metric(4), standard_complex_structure(4)};
  const AntiHermitianStructure t = twin_metric(s);
  EXPECT_EQ(twin_metric(t).metric(), Rational(-1) * s.metric());
  EXPECT_EQ(twin_metric(twin_metric(twin_metric(t))).metric(), s.metric());
  EXPECT_EQ(signature(t.metric()), (Signature{2, 2, 0}));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(t.metric()(k, k).is_zero());
  const auto n7 = catalog::n7();
  EXPECT_EQ(levi_civita(twin_metric(n7)), levi_civita(n7));
}

TEST(LeviCivita, N7PrintedCoefficients) {
  const auto c = levi_civita(catalog::n7());
  const Rational h(1, 2);
  EXPECT_EQ(c.apply(e(6, 0), e(6, 0)), -h * e(6, 2));
  EXPECT_EQ(c.apply(e(6, 0), e(6, 1)), h * e(6, 3));
  EXPECT_EQ(c.apply(e(6, 0), e(6, 2)), e(6, 4));
  EXPECT_EQ(c.apply(e(6, 0), e(6, 3)), e(6, 5));
  EXPECT_EQ(c.apply(e(6, 1), e(6, 0)), -h * e(6, 3));
  EXPECT_EQ(c.apply(e(6, 1), e(6, 1)), -h * e(6, 2));
  EXPECT_EQ(c.apply(e(6, 1), e(6, 2)), e(6, 5));
  EXPECT_EQ(c.apply(e(6, 1), e(6, 3)), Rational(-1) * e(6, 4));
}

TEST(LeviCivita, MatchesKoszulOracle) {
  expect_connection_matches_oracle(catalog::n7());
  expect_connection_matches_oracle(catalog::sl2c_killing());
  expect_connection_matches_oracle(heisenberg_standard());
  Rng rng(11, 3);
  for (int k = 0; k < 5; ++k) {
    const LieAlgebra l = random::real_algebra(rng, 4);
    expect_connection_matches_oracle(random::anti_hermitian_metric(l, random::complex_structure(rng, 4), rng));
  }
}

TEST(LeviCivita, AbelianAlgebraIsFlat) {
  Rng rng(5, 4);
  const auto s = random::anti_hermitian_metric(LieAlgebra::abelian(4), random::complex_structure(rng, 4), rng);
  EXPECT_TRUE(levi_civita(s).christoffel().is_zero());
  EXPECT_TRUE(nabla_J(s, levi_civita(s)).is_zero());
}

TEST(LeviCivita, CaseTwoClosedForm) {
  const auto s = make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0));
  EXPECT_EQ(levi_civita(s).apply(e(4, dim4::X), e(4, dim4::X)), Rational(-1) * e(4, dim4::Y));
}

TEST(AntiKahler, Examples) {
  EXPECT_TRUE(is_anti_kahler(catalog::n7()));
  EXPECT_TRUE(is_anti_kahler(make_family_case1(Rational(1), Rational(0), 1)));
  EXPECT_TRUE(is_anti_kahler(catalog::abelian4()));
  EXPECT_FALSE(is_anti_kahler(heisenberg_standard()));
}

TEST(AntiKahler, BiInvariantJForAnyMetric) {
  Rng rng(21, 3);
  const auto base = make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0));
  for (int k = 0; k < 5; ++k) {
    const auto s = random::anti_hermitian_metric(base.algebra(), base.complex_structure(), rng);
    EXPECT_NE(s.metric(), base.metric());
    EXPECT_TRUE(is_anti_kahler(s));
  }
}

TEST(Curvature, FamilyOneIsFlat) {
  for (const auto& [a, b, eps] : {std::tuple{1, 0, 1}, {2, 1, -1}, {0, 3, 1}, {-1, 2, -1}})
    EXPECT_TRUE(is_flat(make_family_case1(Rational(a), Rational(b), eps)));
}

TEST(Curvature, AffCBlock) {
  // R(X, Y) in basis (X, JX, Y, JY) is [[0, -H], [H, 0]] with H = I for zeta = 1
  const auto s = make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0));
  const auto r = curvature(s, levi_civita(s));
  const RationalMatrix expected{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  EXPECT_EQ(r.op(dim4::X, dim4::Y), expected);
}

TEST(Curvature, MatchesIndexOracle) {
  for (const auto& s : {catalog::sl2c_killing(), heisenberg_standard(),
                        make_family_case2(Rational(1), Rational(2), Rational(3), Rational(4))}) {
    const auto r = curvature(s, levi_civita(s));
    const oracle::Table4 o = oracle::riemann(s);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t k = 0; k < s.dim(); ++k)
          for (std::size_t l = 0; l < s.dim(); ++l) ASSERT_EQ(r.upper(i, j, k, l).value(), o[i][j][k][l]);
    expect_ricci_matches_oracle(s);
  }
}

TEST(Curvature, BiInvariantMetricFormula) {
  const auto s = catalog::sl2c_killing();
  ASSERT_TRUE(is_bi_invariant_metric(s));
  const auto r = curvature(s, levi_civita(s));
  const LieAlgebra& l = s.algebra();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k)
        EXPECT_EQ(r.op(i, j) * e(6, k), Rational(-1, 4) * l.bracket(l.bracket_basis(i, j), e(6, k)));
  EXPECT_TRUE(curvature_is_pure(s, r));
}

TEST(Ricci, AffCIsMinusTwo) {
  const auto s = make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0));
  const Ricci ric = ricci(s, levi_civita(s));
  EXPECT_EQ(ric.operator_, Rational(-2) * RationalMatrix::identity(4));
  const auto e1 = is_einstein(s);
  EXPECT_TRUE(e1.einstein);
  EXPECT_EQ(e1.lambda, Rational(-2));
  const auto e2 = is_einstein(make_family_case2(Rational(0), Rational(0), Rational(1), Rational(0)));
  EXPECT_TRUE(e2.einstein);
  EXPECT_EQ(e2.lambda, Rational(-2));
}

TEST(Ricci, ZetaZeroFlatAndImaginaryZetaNotEinstein) {
  EXPECT_TRUE(is_flat(make_family_case2(Rational(1), Rational(0), Rational(0), Rational(1))));
  const auto s = make_family_case2(Rational(1), Rational(1), Rational(0), Rational(0));
  EXPECT_FALSE(is_einstein(s).einstein);
  EXPECT_FALSE(is_ricci_flat(s));
  EXPECT_TRUE(is_ricci_flat(catalog::abelian4()));
}

TEST(Ricci, KillingMetricOnSl2c) {
  // With R(x,y)z = -1/4 [[x,y],z] the contraction gives Rc = -1/4 B, so Ric = -1/4 I for g = B.
  const auto s = catalog::sl2c_killing();
  const Ricci ric = ricci(s, levi_civita(s));
  const oracle::Mat b = oracle::killing(s.algebra());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(ric.form(i, j).value(), mpq_class(-1, 4) * b[i][j]);
  EXPECT_EQ(ric.operator_, Rational(-1, 4) * RationalMatrix::identity(6));
  EXPECT_EQ(is_einstein(s).lambda, Rational(-1, 4));
}

TEST(Properties, AlmostStructureIdentities) {
  Rng rng(9, 3);
  for (int k = 0; k < 5; ++k) {
    const LieAlgebra l = random::real_algebra(rng, 4);
    const auto s = random::anti_hermitian_metric(l, random::complex_structure(rng, 4), rng);
    const auto c = levi_civita(s);
    EXPECT_TRUE(is_metric_compatible(s, c));
    EXPECT_TRUE(is_torsion_free(s, c));
    EXPECT_TRUE(nabla_J_is_symmetric(s, c));
  }
}

TEST(Properties, N7AbelianConsequences) {
  const auto s = catalog::n7();
  const auto c = levi_civita(s);
  EXPECT_TRUE(connection_J_relation(s, c, -1));
  EXPECT_TRUE(matches_abelian_connection_formula(s, c));
  EXPECT_TRUE(covariant_derivatives_commute(c));
  EXPECT_TRUE(killing_is_J_anti_invariant(s));
  EXPECT_TRUE(derived_bracket_commutes_with_J(s));
}
