#include <gtest/gtest.h>

#include "akahler/catalog.hpp"
#include "akahler/random.hpp"

using namespace akahler;

namespace {

AntiHermitianStructure heisenberg_standard() {
  return {LieAlgebra::from_brackets(4, {{{0, 1}, basis_vector(4, 2)}}), standard_neutral_metric(4),
          standard_complex_structure(4)};
}

}  // namespace

TEST(Theta, VanishesOnAbelianAndAbelianJ) {
  EXPECT_TRUE(theta_bracket_form(catalog::abelian4()).is_zero());
  EXPECT_TRUE(theta_bracket_form(catalog::n7()).is_zero());
  EXPECT_TRUE(theta_connection_form(catalog::abelian4(), levi_civita(catalog::abelian4())).is_zero());
}

TEST(Theta, VanishesOnDim4AntiKahlerCatalog) {
  for (const char* name : {"abelian4", "r-1-1_std", "affC_std", "mu1:2,-1/3,-1", "mu2:1,2,3,4"})
    EXPECT_TRUE(theta_bracket_form(catalog::get(name).structure).is_zero()) << name;
}

TEST(Theta, Sl2cIsAMultipleOfTheBracketPairing) {
  const auto s = catalog::sl2c_killing();
  const ThetaTensor th = theta_bracket_form(s);
  ASSERT_FALSE(th.is_zero());
  EXPECT_TRUE(theta_is_skew(th));
  EXPECT_TRUE(theta_is_pure(th, s.complex_structure()));
  // ad-invariance of g and J makes the three cyclic terms equal
  const RationalMatrix& j = s.complex_structure();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        const Rational pairing = s.inner(s.algebra().bracket(j.column(i), basis_vector(6, a)), basis_vector(6, b));
        EXPECT_EQ(th(i, a, b), Rational(3) * pairing);
      }
}

TEST(Theta, ConnectionFormEqualsBracketForm) {
  const auto s = catalog::sl2c_killing();
  const ThetaRatio r = theta_ratio(s);
  ASSERT_TRUE(r.proportional);
  EXPECT_EQ(r.ratio, Rational(1));
  Rng rng(4, 3);
  for (int k = 0; k < 5; ++k) {
    const LieAlgebra l = random::real_algebra(rng, 4);
    const auto t = random::anti_hermitian_metric(l, random::complex_structure(rng, 4), rng);
    EXPECT_EQ(theta_connection_form(t, levi_civita(t)), theta_bracket_form(t));
  }
}

TEST(Theta, ZeroTensorIsSkewAndPure) {
  const ThetaTensor z{Tensor3(4)};
  EXPECT_TRUE(theta_is_skew(z));
  EXPECT_TRUE(theta_is_pure(z, standard_complex_structure(4)));
}

TEST(Theta, CriterionAgreesWithParallelJ) {
  EXPECT_TRUE(anti_kahler_via_theta(catalog::n7()));
  EXPECT_TRUE(anti_kahler_via_theta(catalog::abelian4()));
  EXPECT_TRUE(anti_kahler_via_theta(catalog::sl2c_killing()));
  const auto h = heisenberg_standard();
  EXPECT_FALSE(theta_bracket_form(h).is_zero());
  EXPECT_FALSE(anti_kahler_via_theta(h));
  EXPECT_FALSE(is_anti_kahler(h));
}

TEST(Theta, NonAntiKahlerStructureOnN7) {
  Rng rng(12, 3);
  const LieAlgebra n7 = catalog::n7().algebra();
  int seen = 0;
  for (int k = 0; k < 10 && seen < 3; ++k) {
    const RationalMatrix j = random::complex_structure(rng, 6);
    if (is_abelian_J(n7, j)) continue;
    const auto s = random::anti_hermitian_metric(n7, j, rng);
    if (is_anti_kahler(s)) continue;
    ++seen;
    const ThetaTensor th = theta_bracket_form(s);
    EXPECT_FALSE(theta_is_skew(th) && theta_is_pure(th, j));
  }
  EXPECT_GT(seen, 0);
}
