#include <gtest/gtest.h>

#include "akahler/catalog.hpp"
#include "akahler/random.hpp"
#include "oracles.hpp"

using namespace akahler;

namespace {

Vector e(std::size_t n, std::size_t k) { return basis_vector(n, k); }

LieAlgebra heisenberg_plus_r() {
  return LieAlgebra::from_brackets(4, {{{0, 1}, e(4, 2)}});
}

void expect_matches_oracle(const RationalMatrix& m, const oracle::Mat& o) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j).value(), o[i][j]) << i << "," << j;
}

}  // namespace

TEST(LieAlgebra, Brackets) {
  EXPECT_EQ(r_minus1_minus1().bracket(e(4, 0), e(4, 1)), e(4, 1));
  const LieAlgebra n7 = catalog::n7().algebra();
  EXPECT_EQ(n7.bracket(e(6, 1), e(6, 3)), Rational(-1) * e(6, 4));
  const Vector x{Rational(1), Rational(2, 3), Rational(-1), Rational(0), Rational(5), Rational(1, 7)};
  EXPECT_TRUE(is_zero(n7.bracket(x, x)));
}

TEST(LieAlgebra, JacobiResidual) {
  EXPECT_TRUE(jacobi_residual(LieAlgebra::abelian(4)).is_zero());
  EXPECT_TRUE(jacobi_residual(catalog::n7().algebra()).is_zero());
  // [e1,e2]=e3, [e1,e3]=e1: triple (e1,e2,e3) gives [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + 0 - [e1,e2] = -e3
  LieAlgebraDraft d(3);
  d.set_bracket(0, 1, e(3, 2));
  d.set_bracket(0, 2, e(3, 0));
  EXPECT_FALSE(jacobi_residual(d).is_zero());
  EXPECT_THROW(d.validate(), JacobiViolation);
}

TEST(LieAlgebra, KillingForm) {
  EXPECT_TRUE(killing_form(LieAlgebra::abelian(4)).is_zero());
  const LieAlgebra r = r_minus1_minus1();
  RationalMatrix expected(4, 4);
  expected(0, 0) = Rational(3);
  EXPECT_EQ(killing_form(r), expected);
  expect_matches_oracle(killing_form(r), oracle::killing(r));
  const LieAlgebra sl = catalog::sl2c_real();
  const RationalMatrix b = killing_form(sl);
  expect_matches_oracle(b, oracle::killing(sl));
  EXPECT_FALSE(determinant(b).is_zero());
  EXPECT_EQ(signature(b), (Signature{3, 3, 0}));
}

TEST(LieAlgebra, Unimodular) {
  EXPECT_TRUE(is_unimodular(catalog::n7().algebra()));
  EXPECT_FALSE(is_unimodular(r_minus1_minus1()));
  EXPECT_EQ(r_minus1_minus1().ad(e(4, 0)), RationalMatrix::diagonal(std::vector<Rational>{0, 1, -1, -1}));
  EXPECT_TRUE(is_unimodular(LieAlgebra::abelian(4)));
}

TEST(LieAlgebra, DerivedAndCenterDimensions) {
  EXPECT_EQ(derived_dim(LieAlgebra::abelian(4)), 0u);
  EXPECT_EQ(center_dim(LieAlgebra::abelian(4)), 4u);
  EXPECT_EQ(derived_dim(aff_C_real()), 2u);
  EXPECT_EQ(derived_dim(r_minus1_minus1()), 3u);
  EXPECT_EQ(center_dim(heisenberg_plus_r()), 2u);
}

TEST(ComplexStructure, Nijenhuis) {
  const auto aff = make_family_case2(Rational(1), Rational(2), Rational(3), Rational(4));
  EXPECT_TRUE(nijenhuis(aff.algebra(), aff.complex_structure()).is_zero());
  const auto n7 = catalog::n7();
  EXPECT_TRUE(nijenhuis(n7.algebra(), n7.complex_structure()).is_zero());
  // [e1,e2]=e3 with J e1=e2, J e3=e4: every N(ea,eb) reduces to N(e1,e2) = [e2,-e1] - [e1,e2] = 0
  const LieAlgebra h = heisenberg_plus_r();
  EXPECT_TRUE(nijenhuis(h, standard_complex_structure(4)).is_zero());
  // J e1=e3, J e2=e4: N(e1,e2) = [e3,e4] - [e1,e2] - J[e3,e2] - J[e1,e4] = -e3
  RationalMatrix j(4, 4);
  j(2, 0) = j(3, 1) = Rational(1);
  j(0, 2) = j(1, 3) = Rational(-1);
  EXPECT_EQ(nijenhuis(h, j).fiber(0, 1), Rational(-1) * e(4, 2));
}

TEST(ComplexStructure, AbelianBiInvariantAntiAbelian) {
  const auto n7 = catalog::n7();
  EXPECT_TRUE(is_abelian_J(n7.algebra(), n7.complex_structure()));
  EXPECT_FALSE(is_bi_invariant_J(n7.algebra(), n7.complex_structure()));
  const auto aff = make_family_case2(Rational(1, 2), Rational(-1), Rational(0), Rational(3));
  EXPECT_TRUE(is_bi_invariant_J(aff.algebra(), aff.complex_structure()));
  const RationalMatrix j = standard_complex_structure(4);
  EXPECT_TRUE(is_abelian_J(LieAlgebra::abelian(4), j));
  EXPECT_TRUE(is_bi_invariant_J(LieAlgebra::abelian(4), j));
  EXPECT_TRUE(is_anti_abelian_J(LieAlgebra::abelian(4), j));
  EXPECT_THROW(is_abelian_J(LieAlgebra::abelian(4), RationalMatrix::identity(4)), NotComplexStructure);
}

TEST(LieAlgebra, ParserLevelValidation) {
  LieAlgebraDraft d(3);
  d.set_raw(0, 1, e(3, 2));
  EXPECT_THROW(d.validate(), AntisymmetryViolation);
}

TEST(LieAlgebra, TransportPreservesJacobiAndInvariants) {
  Rng rng(7, 3);
  const LieAlgebra l = catalog::sl2c_real();
  const RationalMatrix p = random::invertible(rng, 6);
  const LieAlgebra t = l.transport(p);
  EXPECT_TRUE(jacobi_residual(t).is_zero());
  EXPECT_EQ(signature(killing_form(t)), (Signature{3, 3, 0}));
  EXPECT_EQ(derived_dim(t), 6u);
  // P maps the new basis into the old one: P [x, y]' = [P x, P y]
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_EQ(p * t.bracket_basis(i, j), l.bracket(p.column(i), p.column(j)));
}
