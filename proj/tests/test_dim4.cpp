#include <gtest/gtest.h>

#include "akahler/dim4.hpp"
#include "akahler/random.hpp"

using namespace akahler;
using namespace akahler::dim4;

namespace {

Vector e(std::size_t k) { return basis_vector(4, k); }
Vector neg(std::size_t k) { return Rational(-1) * e(k); }
std::array<Rational, 4> t_of(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

}  // namespace

TEST(Families, CaseOneBrackets) {
  const LieAlgebra l = make_family_case1(Rational(1), Rational(0), 1).algebra();
  EXPECT_EQ(l.bracket(e(X), e(Y)), e(JX));
  EXPECT_EQ(l.bracket(e(X), e(JY)), e(JY) - e(X));
  EXPECT_EQ(l.bracket(e(JX), e(JY)), neg(Y));
  EXPECT_EQ(l.bracket(e(Y), e(JY)), neg(JX));
}

TEST(Families, CaseOneIsFlatAntiKahler) {
  Rng rng(31, 4);
  for (int k = 0; k < 10; ++k) {
    Rational a = rng.rational(), b = rng.rational();
    if (a.is_zero() && b.is_zero()) a = Rational(1);
    const int eps = rng.coin() ? 1 : -1;
    const auto s = make_family_case1(a, b, eps);
    EXPECT_TRUE(jacobi_residual(s.algebra()).is_zero());
    EXPECT_TRUE(is_flat(s));
    EXPECT_TRUE(is_anti_kahler(s));
  }
  EXPECT_THROW(make_family_case1(Rational(0), Rational(0), 1), DegenerateParameters);
}

TEST(Families, CaseTwoBrackets) {
  const auto s = make_family_case2(t_of(1, 0, 0, 0));
  const LieAlgebra& l = s.algebra();
  EXPECT_EQ(l.bracket(e(X), e(Y)), e(X));
  EXPECT_EQ(l.bracket(e(X), e(JY)), e(JX));
  EXPECT_EQ(l.bracket(e(JX), e(Y)), e(JX));
  EXPECT_EQ(l.bracket(e(JX), e(JY)), neg(X));
  const auto u = make_family_case2(t_of(1, -2, 3, 5));
  EXPECT_TRUE(is_bi_invariant_J(u.algebra(), u.complex_structure()));
  EXPECT_TRUE(is_zero(u.algebra().bracket(e(X), e(JX))));
  EXPECT_TRUE(is_zero(u.algebra().bracket(e(Y), e(JY))));
}

TEST(Classify, Abelian) {
  const AntiHermitianStructure s{LieAlgebra::abelian(4), standard_metric(), standard_J()};
  const auto r = classify(s);
  EXPECT_EQ(r.verdict, Dim4Class::abelian);
  EXPECT_TRUE(r.witness_verified);
}

TEST(Classify, CaseOneWithPrintedWitness) {
  const auto r = classify(make_family_case1(Rational(1), Rational(1), 1));
  EXPECT_EQ(r.verdict, Dim4Class::r_minus1_minus1);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, printed_phi_case1(Rational(1), Rational(1), 1));
  EXPECT_TRUE(r.witness_verified);
  EXPECT_EQ(r.rank_A, 3u);
  EXPECT_EQ(r.epsilon, 1);
  EXPECT_EQ(r.derived_dimension, 3u);
  EXPECT_TRUE(r.discriminator_agrees);
  EXPECT_TRUE(r.curvature.flat);
}

TEST(Classify, CaseTwo) {
  const auto r = classify(make_family_case2(t_of(1, 0, 0, 0)));
  EXPECT_EQ(r.verdict, Dim4Class::aff_C);
  EXPECT_EQ(r.zeta, GaussianRational(1));
  EXPECT_TRUE(r.witness_verified);
  EXPECT_EQ(r.rank_A, 0u);
  EXPECT_EQ(r.curvature.lambda, Rational(-2));
}

TEST(Classify, TransportedInputIsNormalized) {
  Rng rng(17, 3);
  const auto s = make_family_case2(t_of(1, 2, 3, 4)).transport(random::invertible(rng, 4));
  const auto r = classify(s);
  EXPECT_EQ(r.verdict, Dim4Class::aff_C);
  EXPECT_EQ(r.zeta, zeta_of(t_of(1, 2, 3, 4)));
  EXPECT_TRUE(r.identities_hold);
  EXPECT_TRUE(r.witness_verified);
  const auto r1 = classify(make_family_case1(Rational(2), Rational(1), -1).transport(random::invertible(rng, 4)));
  EXPECT_EQ(r1.verdict, Dim4Class::r_minus1_minus1);
  EXPECT_TRUE(r1.witness_verified);
}

TEST(Classify, RejectsNonAntiKahlerAndWrongDimension) {
  const AntiHermitianStructure h{LieAlgebra::from_brackets(4, {{{0, 1}, e(2)}}), standard_metric(), standard_J()};
  EXPECT_THROW(classify(h), NotAntiKahler);
  const AntiHermitianStructure six{LieAlgebra::abelian(6), standard_neutral_metric(6), standard_complex_structure(6)};
  EXPECT_THROW(classify(six), DimensionMismatch);
}

TEST(Isomorphism, PrintedCaseOnePhi) {
  Rng rng(41, 4);
  for (int k = 0; k < 10; ++k) {
    Rational a = rng.rational(), b = rng.rational();
    if (a.is_zero() && b.is_zero()) b = Rational(1);
    const int eps = rng.coin() ? 1 : -1;
    const auto phi = printed_phi_case1(a, b, eps);
    EXPECT_TRUE(verify_isomorphism(phi, make_family_case1(a, b, eps).algebra(), r_minus1_minus1()));
    EXPECT_EQ(phi * printed_phi_case1_inverse(a, b, eps), RationalMatrix::identity(4));
  }
}

TEST(Isomorphism, PrintedCaseTwoPhi) {
  const auto t = t_of(1, 2, 3, 4);
  const auto phi = printed_phi_case2(t);
  EXPECT_TRUE(verify_isomorphism(phi, make_family_case2(t).algebra(), aff_C_real()));
  EXPECT_EQ(invert(phi), Rational(1, 30) * phi.transpose());
}

TEST(Isomorphism, IdentityAndRejections) {
  const LieAlgebra l = aff_C_real();
  EXPECT_TRUE(verify_isomorphism(RationalMatrix::identity(4), l, l));
  EXPECT_FALSE(verify_isomorphism(RationalMatrix(4, 4), l, l));
  EXPECT_FALSE(verify_isomorphism(RationalMatrix::identity(4), l, r_minus1_minus1()));
  EXPECT_THROW(verify_isomorphism(RationalMatrix::identity(3), l, l), DimensionMismatch);
}

TEST(Equivalence, CaseOneWitness) {
  const auto src = make_family_case1(Rational(1), Rational(0), 1);
  const auto w0 = equivalence_witness_case1(Rational(1), Rational(0), 1);
  EXPECT_TRUE(verify_equivalence(w0.matrix, src, src));
  const auto w = equivalence_witness_case1(Rational(2), Rational(1), -1);
  const auto dst = make_family_case1(Rational(2), Rational(1), -1);
  EXPECT_TRUE(verify_equivalence(w.matrix, src, dst));
  EXPECT_TRUE(preserves_complex_form(src, w.matrix));
  EXPECT_EQ(w.source, "printed");
  EXPECT_EQ(w.matrix * printed_equivalence_case1_inverse(Rational(2), Rational(1), -1), RationalMatrix::identity(4));
}

TEST(Equivalence, SearchFallbackFindsAWitness) {
  const auto src = make_family_case1(Rational(1), Rational(0), 1);
  const auto dst = make_family_case1(Rational(2), Rational(1), -1);
  const auto w = search_equivalence(src, dst);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_equivalence(*w, src, dst));
}

TEST(Moduli, ZetaZeroRepresentativesAreEquivalent) {
  const auto t = t_of(1, 0, 0, 1);
  EXPECT_TRUE(zeta_of(t).is_zero());
  for (const auto& tp : {t_of(2, 0, 0, 2), t_of(2, 0, 0, -2), t_of(0, 1, -1, 0), t_of(3, 1, -1, 3), t_of(1, 0, 0, -1)}) {
    ASSERT_TRUE(zeta_of(tp).is_zero());
    const auto w = equivalent_case2(t, tp);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_equivalence(*w, make_family_case2(t), make_family_case2(tp)));
  }
}

TEST(Moduli, ZetaSeparatesOrbits) {
  EXPECT_EQ(zeta_of(t_of(1, 0, 0, 0)), GaussianRational(1));
  EXPECT_EQ(zeta_of(t_of(0, 1, 0, 0)), GaussianRational(-1));
  EXPECT_FALSE(equivalent_case2(t_of(1, 0, 0, 0), t_of(0, 1, 0, 0)));
  EXPECT_TRUE(equivalent_case2(t_of(1, 2, 3, 4), t_of(1, 2, 3, 4)));
  EXPECT_TRUE(equivalent_case2(t_of(1, 0, 0, 0), t_of(0, 0, 1, 0)));
  EXPECT_EQ(orbit_invariant(make_family_case2(t_of(1, 2, 3, 4))), zeta_of(t_of(1, 2, 3, 4)));
}

TEST(Moduli, PrintedPhiONegatesTheComplexForm) {
  const auto s = make_family_case2(t_of(1, 0, 0, 1));
  EXPECT_FALSE(preserves_complex_form(s, printed_phi_o()));
  EXPECT_FALSE(preserves_metric_and_J(s, printed_phi_o()));
}

TEST(ClosedForm, CurvatureOfCaseTwo) {
  const auto c = closed_form_curvature_case2(t_of(1, 0, 0, 0));
  EXPECT_EQ(c.ricci_operator, Rational(-2) * RationalMatrix::identity(4));
  EXPECT_TRUE(c.einstein);
  EXPECT_EQ(c.lambda, Rational(-2));
  EXPECT_TRUE(closed_form_curvature_case2(t_of(1, 0, 0, 1)).flat);
  EXPECT_TRUE(is_flat(make_family_case2(t_of(1, 0, 0, 1))));
  const auto d = closed_form_curvature_case2(t_of(0, 0, 1, 0));
  EXPECT_TRUE(d.einstein);
  EXPECT_EQ(d.lambda, Rational(-2));
  Rng rng(8, 4);
  for (int k = 0; k < 10; ++k) {
    const std::array<Rational, 4> t{rng.rational(), rng.rational(), rng.rational(), rng.nonzero_rational()};
    EXPECT_TRUE(closed_form_agrees_with_engine(t));
  }
}
