#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "random_fields.hpp"
#include "thinlayer/errors.hpp"
#include "thinlayer/perturbation.hpp"

using namespace thinlayer;
using testing_support::random_polynomial;

namespace {

Polynomial2 f_star_poly(double delta0s, double R1s, double R2s) {
  return Polynomial2::constant(delta0s) - Polynomial2::monomial(0.5 / R1s, 2, 0) -
         Polynomial2::monomial(0.5 / R2s, 0, 2);
}

const Vec2 kProbe[] = {{0.0, 0.0}, {0.3, -0.2}, {-0.7, 0.5}, {1.1, 0.9}};

}  // namespace

TEST(PerturbationSeries, LeadingCoefficients) {
  const Material mat = Material::compressible(2.0, 0.3);
  const Polynomial2 f = f_star_poly(1.0, 2.0, 3.0);
  const Polynomial2 psi = Polynomial2::constant(0.2) + Polynomial2::monomial(0.5, 1, 1);
  const PerturbationSeries s(mat, 1.5, 0.1, Field2::polynomial(f), Field2::polynomial(psi));
  for (Vec2 y : kProbe) {
    EXPECT_DOUBLE_EQ(s.sigma(0, y).total(), f(y));
    EXPECT_NEAR(s.sigma(1, y).total(), -psi(y) * f(y), 1e-15);
  }
  EXPECT_THROW(s.sigma(4, {}), DomainError);
}

TEST(PerturbationSeries, UniformLayerKillsPsiTerms) {
  const Material mat = Material::compressible(1.0, 0.35);
  const Polynomial2 f = f_star_poly(0.8, 1.0, 2.0);
  const PerturbationSeries s(mat, 1.0, 0.1, Field2::polynomial(f), Field2::constant(0.0));
  const double K = s.bending_coefficient();
  const double l = mat.lambda();
  const double m = mat.mu();
  EXPECT_NEAR(K, l * (l - m) / (3 * m * (2 * m + l)), 1e-15);
  for (Vec2 y : kProbe) {
    EXPECT_EQ(s.sigma(1, y).total(), 0.0);
    EXPECT_EQ(s.sigma(3, y).total(), 0.0);
    EXPECT_NEAR(s.sigma(2, y).total(), K * -(1.0 / 1.0 + 1.0 / 2.0), 1e-15);
  }
}

TEST(PerturbationSeries, EqualLameParameters) {
  // lambda = mu: the (lambda - mu) terms vanish and the curvature factor is 1/6.
  const Material mat = Material::from_lame(0.7, 0.7);
  const double hs = 1.3;
  const Polynomial2 f = f_star_poly(1.0, 0.5, 4.0);
  const Polynomial2 psi = Polynomial2::monomial(0.3, 2, 0) + Polynomial2::monomial(-0.2, 1, 2);
  const PerturbationSeries s(mat, hs, 0.1, Field2::polynomial(f), Field2::polynomial(psi));
  EXPECT_NEAR(s.curvature_coefficient(), hs * hs / 6.0, 1e-15);
  const Polynomial2 lap_psi = psi.laplacian();
  for (Vec2 y : kProbe) {
    EXPECT_NEAR(s.sigma(2, y).total(), psi(y) * psi(y) * f(y), 1e-14);
    const double expect = -std::pow(psi(y), 3) * f(y) - hs * hs / 6.0 * f(y) * lap_psi(y);
    EXPECT_NEAR(s.sigma(3, y).total(), expect, 1e-13);
  }
}

TEST(PerturbationSeries, GapLaplacianFromStarredRadii) {
  const Material mat = Material::compressible(1.0, 0.2);
  const LayerThickness layer = LayerThickness::uniform(0.05, 0.05);
  const ParaboloidGap gap{20.0, 40.0, 0.01};
  const PerturbationSeries s = perturbation_coefficients(mat, layer, gap);
  // R* = eps R.
  const double expect = -(1.0 / (0.05 * 20.0) + 1.0 / (0.05 * 40.0));
  EXPECT_NEAR(s.f_star().jet({0.3, 0.2}).laplacian(), expect, 1e-13);
  EXPECT_NEAR(s.f_star()({0.0, 0.0}), 0.01 / 0.05, 1e-15);
}

TEST(PerturbationSeries, SymbolicOracleOnPolynomials) {
  std::mt19937 rng(7);
  const Material mat = Material::compressible(3.0, 0.32);
  const double hs = 0.8;
  const double l = mat.lambda();
  const double m = mat.mu();
  const double K = hs * hs * l * (l - m) / (3 * m * (2 * m + l));
  const double Q = hs * hs * l * (2 * l + m) / (6 * m * (2 * m + l));
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial2 f = random_polynomial(rng, 2);
    const Polynomial2 psi = random_polynomial(rng, 4, 0.5);
    const PerturbationSeries s(mat, hs, 0.1, Field2::polynomial(f), Field2::polynomial(psi));
    // Coefficient-level products and derivatives.
    const Polynomial2 s2 = pow(psi, 2) * f + K * f.laplacian();
    const Polynomial2 grad_dot = f.derivative(0) * psi.derivative(0) + f.derivative(1) * psi.derivative(1);
    const Polynomial2 s3 =
        (-1.0) * pow(psi, 3) * f + K * (grad_dot + psi * f.laplacian()) - Q * (f * psi.laplacian());
    for (Vec2 y : kProbe) {
      EXPECT_NEAR(s.sigma(2, y).total(), s2(y), 1e-11 * (1 + std::abs(s2(y))));
      EXPECT_NEAR(s.sigma(3, y).total(), s3(y), 1e-11 * (1 + std::abs(s3(y))));
    }
  }
}

TEST(PerturbationSeries, UnsimplifiedSigma3Agrees) {
  std::mt19937 rng(11);
  const Material mat = Material::compressible(1.0, 0.41);
  for (int trial = 0; trial < 10; ++trial) {
    const Field2 f = Field2::polynomial(random_polynomial(rng, 2));
    const Field2 psi = Field2::polynomial(random_polynomial(rng, 3, 0.5));
    const PerturbationSeries s(mat, 1.2, 0.1, f, psi);
    for (Vec2 y : kProbe) {
      const double a = s.sigma(3, y).total();
      EXPECT_NEAR(s.sigma3_expanded(y), a, 1e-11 * (1 + std::abs(a)));
    }
  }
  // Jet-backed fields take the product-rule path.
  const Field2 f = Field2::from_jet([](Vec2 y) { return Jet::constant(1.0) - 0.5 * (Jet::y1(y) * Jet::y1(y)); });
  const Field2 psi = Field2::from_jet([](Vec2 y) { return sin(Jet::y1(y)) * exp(0.3 * Jet::y2(y)); });
  const PerturbationSeries s(mat, 1.2, 0.1, f, psi);
  for (Vec2 y : kProbe) EXPECT_NEAR(s.sigma3_expanded(y), s.sigma(3, y).total(), 1e-12);
}

TEST(PerturbationSeries, GeometricSeriesForConstantPsi) {
  const Material mat = Material::compressible(1.0, 0.3);
  const Polynomial2 f = f_star_poly(1.0, 2.0, 5.0);
  for (double c : {-0.7, 0.25, 1.0, 3.0}) {
    const PerturbationSeries s(mat, 1.0, 0.1, Field2::polynomial(f), Field2::constant(c));
    for (Vec2 y : kProbe) {
      for (int k = 0; k <= 3; ++k) {
        EXPECT_NEAR(s.sigma(k, y).thickness_part, std::pow(-c, k) * f(y), 1e-15 * (1 + std::abs(f(y))))
            << "k = " << k;
      }
    }
  }
}

TEST(PerturbationPressure, ZeroEpsIsLeadingWinkler) {
  const Material mat = Material::compressible(1.0, 0.3);
  const Polynomial2 f = f_star_poly(1.0, 2.0, 5.0);
  const PerturbationSeries s(mat, 0.9, 0.0, Field2::polynomial(f), Field2::constant(0.4));
  for (Vec2 y : kProbe) EXPECT_DOUBLE_EQ(perturbation_pressure(s, y), s.prefactor() * f(y));
}

TEST(PerturbationPressure, ConstantPsiMatchesWinklerExpansion) {
  // Uniform thickening H = h(1 + eps c): Winkler gives f/(1 + eps c) and the
  // psi-parts reproduce the truncated geometric series.
  const Material mat = Material::compressible(1.0, 0.3);
  const double c = 0.6;
  const double eps = 0.05;
  const Polynomial2 f = f_star_poly(1.0, 2.0, 5.0);
  const PerturbationSeries s(mat, 1.0, eps, Field2::polynomial(f), Field2::constant(c));
  for (Vec2 y : kProbe) {
    double part = 0.0;
    for (int k = 3; k >= 0; --k) part = s.sigma(k, y).thickness_part + eps * part;
    const double winkler = f(y) / (1.0 + eps * c);
    EXPECT_NEAR(part, winkler, std::pow(eps * c, 4) * std::abs(f(y)) * 1.01 + 1e-15);
  }
}

TEST(PerturbationSeries, RejectsIncompressible) {
  EXPECT_THROW(PerturbationSeries(Material::incompressible(1.0), 1.0, 0.1, Field2::constant(1.0),
                                  Field2::constant(0.0)),
               IncompressibleSingularity);
  EXPECT_THROW(Material::from_lame(1.0, 0.0), DomainError);
}

namespace {

double residual_at(double eps, int cells) {
  const Material mat = Material::compressible(1.0, 0.3);
  const Polynomial2 f = f_star_poly(1.0, 2.0, 3.0);
  const Polynomial2 psi = Polynomial2::constant(0.4) + Polynomial2::monomial(0.5, 1, 0) +
                          Polynomial2::monomial(-0.3, 0, 1);
  const PerturbationSeries s(mat, 1.0, eps, Field2::polynomial(f), Field2::polynomial(psi));
  // Contact ellipse of f: a_alpha = sqrt(2 R* delta0*).
  return residual_check(s, EllipseDomain(2.0, std::sqrt(6.0)), DiskGrid(cells));
}

}  // namespace

TEST(ResidualCheck, ZeroEpsIsExact) { EXPECT_LT(residual_at(0.0, 64), 1e-12); }

TEST(ResidualCheck, FourthOrderInEps) {
  double prev = 0.0;
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const double r = residual_at(eps, 128);
    if (prev > 0.0) {
      EXPECT_NEAR(std::log2(prev / r), 4.0, 0.3) << "eps = " << eps;
    }
    prev = r;
  }
}

TEST(ResidualCheck, UniformLayerLeavesOnlyHighOrderRemainder) {
  const Material mat = Material::compressible(1.0, 0.3);
  const Polynomial2 f = f_star_poly(1.0, 2.0, 3.0);
  // psi* = 0 and f quadratic: the series is exact to rounding.
  for (double eps : {0.2, 0.05}) {
    const PerturbationSeries s(mat, 1.0, eps, Field2::polynomial(f), Field2::constant(0.0));
    EXPECT_LT(residual_check(s, EllipseDomain(2.0, std::sqrt(6.0)), DiskGrid(64)), 1e-10);
  }
}
