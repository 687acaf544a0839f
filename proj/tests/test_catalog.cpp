#include <gtest/gtest.h>

#include "akahler/catalog.hpp"
#include "akahler/structure_file.hpp"
#include "oracles.hpp"

using namespace akahler;

TEST(Catalog, ExpectedFlagsAreReproduced) {
  for (const auto& name : catalog::list()) {
    const auto entry = catalog::get(name);
    EXPECT_TRUE(catalog::mismatched_flags(entry).empty()) << name;
    EXPECT_FALSE(entry.expected.empty());
  }
}

TEST(Catalog, Abelian4) {
  const auto s = catalog::get("abelian4").structure;
  EXPECT_TRUE(s.algebra().is_abelian());
  EXPECT_EQ(s.metric(), standard_neutral_metric(4));
  EXPECT_EQ(s.complex_structure(), standard_complex_structure(4));
}

TEST(Catalog, N7Data) {
  const auto s = catalog::get("n7_J-1").structure;
  auto e = [](std::size_t k) { return basis_vector(6, k); };
  const LieAlgebra& l = s.algebra();
  EXPECT_EQ(l.bracket(e(0), e(1)), e(3));
  EXPECT_EQ(l.bracket(e(0), e(2)), e(4));
  EXPECT_EQ(l.bracket(e(0), e(3)), e(5));
  EXPECT_EQ(l.bracket(e(1), e(2)), e(5));
  EXPECT_EQ(l.bracket(e(1), e(3)), Rational(-1) * e(4));
  const RationalMatrix& j = s.complex_structure();
  EXPECT_EQ(j * e(0), e(1));
  EXPECT_EQ(j * e(2), Rational(-1) * e(3));
  EXPECT_EQ(j * e(4), Rational(-1) * e(5));
  EXPECT_EQ(s.metric()(0, 4), Rational(1, 2));
}

TEST(Catalog, Sl2cKillingUsesComputedKillingForm) {
  const auto s = catalog::get("sl2c_killing").structure;
  const oracle::Mat b = oracle::killing(s.algebra());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(s.metric()(i, j).value(), b[i][j]);
  // realified [H, E] = 2E and [iH, E] = 2iE
  EXPECT_EQ(s.algebra().bracket_basis(0, 2), Rational(2) * basis_vector(6, 2));
  EXPECT_EQ(s.algebra().bracket_basis(1, 2), Rational(2) * basis_vector(6, 3));
  EXPECT_EQ(s.algebra().bracket_basis(2, 4), basis_vector(6, 0));
  EXPECT_TRUE(is_bi_invariant_J(s.algebra(), s.complex_structure()));
  EXPECT_TRUE(is_bi_invariant_metric(s));
}

TEST(Catalog, Sl2cEinsteinConstant) {
  // Contraction of R = -1/4 ad_[x,y] gives Rc = -1/4 B (oracle-confirmed), so g = B has lambda -1/4.
  const auto e = is_einstein(catalog::get("sl2c_killing").structure);
  EXPECT_TRUE(e.einstein);
  EXPECT_EQ(e.lambda, Rational(-1, 4));
}

TEST(Catalog, StandardFamilyMembers) {
  EXPECT_EQ(catalog::get("r-1-1_std").structure.algebra(), make_family_case1(Rational(1), Rational(0), 1).algebra());
  EXPECT_EQ(catalog::get("affC_std").structure.algebra(),
            make_family_case2(Rational(1), Rational(0), Rational(0), Rational(0)).algebra());
}

TEST(Catalog, ParametrizedNames) {
  EXPECT_EQ(catalog::get("mu1:2,1/2,-1").structure.algebra(),
            make_family_case1(Rational(2), Rational(1, 2), -1).algebra());
  EXPECT_EQ(catalog::get("mu2:1,2,3,4").structure.algebra(),
            make_family_case2(Rational(1), Rational(2), Rational(3), Rational(4)).algebra());
  for (const char* bad : {"nope", "mu1:1,2", "mu1:1,2,3", "mu2:1,x,3,4", "mu1:0,0,1"})
    EXPECT_ANY_THROW(catalog::get(bad)) << bad;
  EXPECT_THROW(catalog::get("nope"), UnknownEntry);
}

TEST(Catalog, ExportsRoundTripByteIdentically) {
  for (const auto& name : catalog::list()) {
    const auto s = catalog::get(name).structure;
    const std::string text = print_structure(s);
    const StructureFile f = parse_structure(text);
    ASSERT_TRUE(f.structure);
    EXPECT_EQ(print_structure(*f.structure), text) << name;
    EXPECT_EQ(f.structure->algebra(), s.algebra());
    EXPECT_EQ(f.structure->metric(), s.metric());
    EXPECT_EQ(f.structure->complex_structure(), s.complex_structure());
  }
}
