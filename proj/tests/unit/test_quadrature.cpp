#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "thinlayer/grid.hpp"
#include "thinlayer/quadrature.hpp"

using namespace thinlayer;

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const GaussRule r = gauss_legendre_unit(6);
  for (int p = 0; p <= 11; ++p) {
    double s = 0.0;
    for (std::size_t k = 0; k < r.nodes.size(); ++k) s += r.weights[k] * std::pow(r.nodes[k], p);
    EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << "degree " << p;
  }
}

TEST(EllipseQuadrature, Area) {
  const EllipseDomain d(3.0, 0.4);
  EXPECT_NEAR(integrate_ellipse(d, [](Vec2) { return 1.0; }), oracle::pi * 1.2, 1e-13);
}

TEST(EllipseQuadrature, ThetaSquared) {
  const EllipseDomain d(2.0, 1.5);
  const double v = integrate_ellipse(d, [&](Vec2 y) { return std::pow(d.theta(y), 2); });
  EXPECT_LT(oracle::rel(v, oracle::theta_squared_integral(2.0, 1.5)), 1e-13);
}

TEST(EllipseQuadrature, RhoStar) {
  const EllipseDomain d(2.0, 1.5);
  const double s = d.aspect();
  const double v = integrate_ellipse(d, [&](Vec2 y) {
    return (s * y.y1 * y.y1 / 4.0 + y.y2 * y.y2 / (s * 2.25)) * d.theta(y);
  });
  EXPECT_LT(oracle::rel(v, oracle::rho_star_integral(2.0, 1.5)), 1e-13);
}

TEST(EllipseQuadrature, OddIntegrandVanishes) {
  const EllipseDomain d(1.0, 2.0);
  EXPECT_NEAR(integrate_ellipse(d, [](Vec2 y) { return y.y1 * std::exp(y.y2); }), 0.0, 1e-13);
}

TEST(EllipseQuadrature, GridFieldsConverge) {
  const EllipseDomain d(2.0, 1.5);
  const double exact = oracle::theta_squared_integral(2.0, 1.5);
  // Extended support: polar rule on the lattice interpolant.
  const ScalarField ext = ScalarField::sample(d, DiskGrid(256), [&](Vec2 y) { return std::pow(d.theta(y), 2); });
  EXPECT_LT(oracle::rel(integrate_ellipse(ext), exact), 1e-6);
  // Disk support: masked summation, second order.
  double prev = 0.0;
  for (int n : {64, 128, 256}) {
    const DiskGrid g(n);
    std::vector<double> v(g.size(), 0.0);
    for (int j = 0; j < g.side(); ++j)
      for (int i = 0; i < g.side(); ++i)
        if (g.strictly_inside(i, j)) v[g.index(i, j)] = std::pow(1.0 - g.radius2(i, j), 2);
    const double e = std::abs(integrate_ellipse(ScalarField(d, g, v, Support::disk)) - exact);
    if (prev > 0.0) EXPECT_GT(prev / e, 3.0) << n;
    prev = e;
  }
}
