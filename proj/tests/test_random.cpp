#include <gtest/gtest.h>

#include "akahler/catalog.hpp"
#include "akahler/random.hpp"

using namespace akahler;

TEST(Random, SameSeedSameStructure) {
  const auto aff = catalog::get("affC_std").structure;
  const auto a = random_anti_hermitian_metric(aff.algebra(), aff.complex_structure(), 99, 4);
  const auto b = random_anti_hermitian_metric(aff.algebra(), aff.complex_structure(), 99, 4);
  EXPECT_EQ(a.metric(), b.metric());
  const auto c = random_anti_hermitian_metric(aff.algebra(), aff.complex_structure(), 100, 4);
  EXPECT_NE(a.metric(), c.metric());
}

TEST(Random, SubSeedsDiffer) {
  EXPECT_EQ(sub_seed(1, 0), sub_seed(1, 0));
  EXPECT_NE(sub_seed(1, 0), sub_seed(1, 1));
  EXPECT_NE(sub_seed(1, 0), sub_seed(2, 0));
}

TEST(Random, RationalsRespectBound) {
  Rng rng(5, 3);
  for (int k = 0; k < 200; ++k) {
    const Rational r = rng.rational();
    EXPECT_LE(abs(r.numerator()), 3);
    EXPECT_LE(r.denominator(), 3);
    EXPECT_FALSE(rng.nonzero_rational().is_zero());
  }
}

TEST(Random, AntiHermitianMetricsAreNeutralAndAntiKahlerOnAffC) {
  const auto aff = catalog::get("affC_std").structure;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = random_anti_hermitian_metric(aff.algebra(), aff.complex_structure(), seed, 4);
    EXPECT_EQ(signature(s.metric()), (Signature{2, 2, 0}));
    EXPECT_TRUE(is_anti_kahler(s));
  }
}

TEST(Random, GeneratedAlgebrasSatisfyJacobi) {
  Rng rng(77, 4);
  for (int k = 0; k < 10; ++k) {
    EXPECT_TRUE(jacobi_residual(random::real_algebra(rng, 4)).is_zero());
    EXPECT_TRUE(jacobi_residual(random::complex_algebra(rng, 6)).is_zero());
    const LieAlgebra c = random::complex_algebra(rng, 4);
    EXPECT_TRUE(is_bi_invariant_J(c, standard_complex_structure(4)));
  }
}

TEST(Random, ComplexOrthogonalMatrices) {
  Rng rng(3, 4);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix q = random::complex_orthogonal(rng, 3);
    EXPECT_EQ(q.transpose() * q, ComplexMatrix::identity(3));
  }
}

TEST(Random, AntiKahlerMetricSpaceOnN7) {
  const auto n7 = catalog::n7();
  const auto space = random::anti_kahler_metric_space(n7.algebra(), n7.complex_structure());
  EXPECT_FALSE(space.empty());
  Rng rng(2, 3);
  for (int k = 0; k < 5; ++k) {
    const auto s = random::anti_kahler_metric(n7.algebra(), n7.complex_structure(), rng);
    ASSERT_TRUE(s);
    EXPECT_TRUE(is_anti_kahler(*s));
    EXPECT_TRUE(is_flat(*s));
  }
}
