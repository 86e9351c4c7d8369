#include <gtest/gtest.h>

#include <cmath>

#include "thinlayer/elastic.hpp"
#include "thinlayer/errors.hpp"

using namespace thinlayer;

TEST(Lame, ZeroPoissonRatioHasNoLambda) {
  const LamePair l = lame_from_engineering(1.0, 0.0);
  EXPECT_DOUBLE_EQ(l.lambda, 0.0);
  EXPECT_DOUBLE_EQ(l.mu, 0.5);
}

TEST(Lame, QuarterPoissonRatioGivesEqualParameters) {
  const LamePair l = lame_from_engineering(1.0, 0.25);
  EXPECT_NEAR(l.lambda, 0.4, 1e-15);
  EXPECT_NEAR(l.mu, 0.4, 1e-15);
}

TEST(Lame, IncompressibleRaises) {
  EXPECT_THROW(lame_from_engineering(1.0, 0.5), IncompressibleSingularity);
}

TEST(Lame, OutOfRangeInputsRaise) {
  EXPECT_THROW(lame_from_engineering(1.0, 0.6), DomainError);
  EXPECT_THROW(lame_from_engineering(1.0, -1.0), DomainError);
  EXPECT_THROW(lame_from_engineering(0.0, 0.3), DomainError);
  EXPECT_THROW(lame_from_engineering(-2.0, 0.3), DomainError);
  EXPECT_THROW(lame_from_engineering(std::nan(""), 0.3), DomainError);
}

TEST(Lame, RoundTripIsIdentity) {
  for (double nu = -0.9; nu <= 0.499 + 1e-12; nu += 0.001) {
    for (double E : {1e-3, 1.0, 7.5, 2.1e5}) {
      const LamePair l = lame_from_engineering(E, nu);
      const EngineeringPair back = engineering_from_lame(l.lambda, l.mu);
      EXPECT_NEAR(back.E, E, 1e-12 * E) << "nu = " << nu;
      EXPECT_NEAR(back.nu, nu, 1e-12 * std::max(1.0, std::abs(nu))) << "nu = " << nu;
    }
  }
}

TEST(MaterialTest, CompressibleCarriesConsistentLamePair) {
  const Material m = Material::compressible(1.0, 0.25);
  EXPECT_FALSE(m.is_incompressible());
  EXPECT_NEAR(m.lambda(), 0.4, 1e-15);
  EXPECT_NEAR(m.mu(), 0.4, 1e-15);
  EXPECT_NEAR(m.p_modulus(), 1.2, 1e-15);
}

TEST(MaterialTest, IncompressibleHasNoLambda) {
  const Material m = Material::incompressible(3.0);
  EXPECT_TRUE(m.is_incompressible());
  EXPECT_DOUBLE_EQ(m.mu(), 1.0);
  EXPECT_DOUBLE_EQ(m.nu(), 0.5);
  EXPECT_THROW(m.lambda(), IncompressibleSingularity);
  EXPECT_THROW(m.p_modulus(), IncompressibleSingularity);
}

TEST(MaterialTest, FromLameMatchesEngineering) {
  const Material m = Material::from_lame(0.0, 0.5);
  EXPECT_NEAR(m.E(), 1.0, 1e-15);
  EXPECT_NEAR(m.nu(), 0.0, 1e-15);
  EXPECT_THROW(Material::from_lame(1.0, 0.0), DomainError);
}
