#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "thinlayer/errors.hpp"
#include "thinlayer/sensitivity.hpp"

using namespace thinlayer;

namespace {

// Bilayer contact used throughout: R1 = 80, R2 = 40, delta0 = 0.8, two
// identical layers (E = 10, h = 2).
SensitivityProblem make_problem(std::vector<LayerVariation> layers) {
  const LayerSpec spec{10.0, 2.0};
  const LayerSpec both[] = {spec, spec};
  const double m = aggregate_compliance(both);
  return {elliptic_contact_solve(m, {80.0, 40.0, 0.8}), std::move(layers)};
}

Field2 bump(double amp, double c1, double c2, double w) {
  return Field2::from_jet([=](Vec2 y) {
    const Jet d1 = Jet::y1(y) - Jet::constant(c1);
    const Jet d2 = Jet::y2(y) - Jet::constant(c2);
    return amp * exp((-1.0 / (2 * w * w)) * (d1 * d1 + d2 * d2));
  });
}

const LayerSpec kLayer{10.0, 2.0};

}  // namespace

TEST(SensitivityRhs, NoVariationGivesZero) {
  const SensitivityProblem prob = make_problem({{kLayer, Field2::constant(0.0)}, {kLayer, Field2::constant(0.0)}});
  const DiskGrid g(32);
  for (double v : sensitivity_rhs(prob, g).values()) EXPECT_EQ(v, 0.0);
  const PoissonResult r = pressure_variation(prob, g);
  EXPECT_EQ(force_variation(r.solution), 0.0);
}

TEST(SensitivityRhs, ConstantVariationFactorsOut) {
  const double c = 0.05;
  const SensitivityProblem prob = make_problem({{kLayer, Field2::constant(c)}, {kLayer, Field2::constant(2 * c)}});
  const Polynomial2 lap = prob.base.pressure_polynomial().laplacian();
  const double factor = -prob.m() * (3 * 4.0 / 10.0) * (c + 2 * c);
  for (RhsForm form : {RhsForm::flux, RhsForm::product_rule}) {
    const ScalarField rhs = sensitivity_rhs(prob, DiskGrid(32), form);
    const DiskGrid& g = rhs.grid();
    for (int j = 0; j < g.side(); ++j) {
      for (int i = 0; i < g.side(); ++i) {
        if (!g.strictly_inside(i, j)) continue;
        const double exact = factor * lap(rhs.point(i, j));
        // Flux differences are exact on the quartic p_bar up to h^2 p''''/12.
        EXPECT_NEAR(rhs.at(i, j), exact, form == RhsForm::product_rule ? 1e-13 : 5e-3 * std::abs(factor * lap({0, 0})));
      }
    }
  }
}

TEST(SensitivityRhs, FluxAndProductRuleAgreeAtSecondOrder) {
  const SensitivityProblem prob = make_problem({{kLayer, Field2::polynomial(theta_polynomial(15.0, 12.0))}});
  double prev = 0.0;
  for (int n : {32, 64, 128}) {
    const DiskGrid g(n);
    const ScalarField a = sensitivity_rhs(prob, g, RhsForm::flux);
    const ScalarField b = sensitivity_rhs(prob, g, RhsForm::product_rule);
    double e = 0.0;
    for (int j = 0; j < g.side(); ++j)
      for (int i = 0; i < g.side(); ++i)
        if (g.strictly_inside(i, j)) e = std::max(e, std::abs(a.at(i, j) - b.at(i, j)));
    if (prev > 0.0) EXPECT_NEAR(prev / e, 4.0, 0.5) << n;
    prev = e;
  }
}

TEST(PressureVariation, UniformThinningRaisesPressure) {
  // Single layer, m = E/h^3: p~ = (3c/h) p_bar exactly for Htilde = -c.
  const double c = 0.1;
  const LayerSpec spec{10.0, 2.0};
  const LayerSpec one[] = {spec};
  const SensitivityProblem prob{elliptic_contact_solve(aggregate_compliance(one), {80.0, 40.0, 0.8}),
                                {{spec, Field2::constant(-c)}}};
  const PoissonResult r = pressure_variation(prob, DiskGrid(128), RhsForm::product_rule);
  const DiskGrid& g = r.solution.grid();
  for (int j = 0; j < g.side(); ++j) {
    for (int i = 0; i < g.side(); ++i) {
      if (!g.strictly_inside(i, j)) continue;
      const double exact = 3 * c / spec.h * elliptic_pressure_eval(prob.base, r.solution.point(i, j));
      const double tol = 2e-3 * 3 * c / spec.h * prob.base.p0;
      // The rhs changes sign near the rim, so positivity holds only where the
      // exact value clears the discretization error.
      if (exact > tol) EXPECT_GT(r.solution.at(i, j), 0.0);
      EXPECT_NEAR(r.solution.at(i, j), exact, tol);
    }
  }
}

TEST(ForceVariation, Oracles) {
  const EllipseDomain d(3.0, 2.0);
  const DiskGrid g(256);
  const ScalarField zero = ScalarField::zeros(d, g, Support::disk);
  EXPECT_EQ(force_variation(zero), 0.0);
  std::vector<double> th(g.size(), 0.0);
  std::vector<double> odd(g.size(), 0.0);
  for (int j = 0; j < g.side(); ++j) {
    for (int i = 0; i < g.side(); ++i) {
      if (!g.strictly_inside(i, j)) continue;
      th[g.index(i, j)] = 1.0 - g.radius2(i, j);
      odd[g.index(i, j)] = g.coord(i) * (1.0 - g.radius2(i, j));
    }
  }
  EXPECT_LT(oracle::rel(force_variation(ScalarField(d, g, th, Support::disk)), oracle::theta_integral(3.0, 2.0)), 1e-4);
  EXPECT_NEAR(force_variation(ScalarField(d, g, odd, Support::disk)), 0.0, 1e-12);
}

TEST(Weights, Values) {
  const EllipseDomain d(2.0, 1.0);
  const WeightFunction rho{WeightKind::rho, d};
  EXPECT_EQ(weight_eval(rho, {0.0, 0.0}), 0.0);
  for (double t = 0.0; t < 6.3; t += 0.3) {
    EXPECT_NEAR(weight_eval(rho, {2.0 * std::cos(t), std::sin(t)}), 0.0, 1e-15);
  }
  EXPECT_EQ(weight_eval(rho, {3.0, 0.0}), 0.0);
  const WeightFunction circ{WeightKind::rho_star, EllipseDomain(1.0, 1.0)};
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(weight_eval(circ, {r, 0.0}), 0.25, 1e-15);
  EXPECT_NEAR(weight_eval(circ, {0.0, r}), 0.25, 1e-15);
  EXPECT_LT(weight_eval(circ, {0.7, 0.0}), 0.25);
  const WeightFunction th{WeightKind::theta_star, d};
  EXPECT_EQ(weight_eval(th, {0.0, 0.0}), 1.0);
  EXPECT_EQ(weight_eval({WeightKind::uniform, d}, {0.5, 0.5}), 1.0);
  EXPECT_EQ(weight_eval({WeightKind::uniform, d}, {2.5, 0.5}), 0.0);
  for (double y1 = -2.0; y1 <= 2.0; y1 += 0.1) {
    EXPECT_GE(weight_eval({WeightKind::rho_star, d}, {y1, 0.3}), 0.0);
  }
}

TEST(Orthogonality, Oracles) {
  const EllipseDomain d(3.0, 2.0);
  const LayerSpec unit{1.0, 1.0};
  const LayerVariation zero[] = {{unit, Field2::constant(0.0)}};
  EXPECT_EQ(orthogonality_residual(zero, d), 0.0);
  const LayerVariation odd[] = {{unit, Field2::from_jet([](Vec2 y) { return Jet::y1(y) * exp(Jet::y2(y)); })}};
  EXPECT_NEAR(orthogonality_residual(odd, d), 0.0, 1e-12);
  const LayerVariation th[] = {{unit, Field2::polynomial(theta_polynomial(3.0, 2.0))}};
  EXPECT_LT(oracle::rel(orthogonality_residual(th, d), oracle::theta_rho_integral(3.0, 2.0)), 1e-12);
}

TEST(Orthogonality, BoundaryTermVanishes) {
  const SensitivityProblem prob = make_problem({{kLayer, bump(0.3, 4.0, -2.0, 5.0)}, {kLayer, Field2::constant(0.2)}});
  EXPECT_LE(std::abs(boundary_flux_term(prob)), 1e-10);
}

TEST(GreenChain, NumericForceVariationMatchesPrediction) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const DiskGrid g(128);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LayerVariation> layers;
    for (int a = 0; a < 2; ++a) {
      layers.push_back({kLayer, bump(0.3 * u(rng), 8 * u(rng), 8 * u(rng), 4.0 + 2 * u(rng))});
    }
    const SensitivityProblem prob = make_problem(layers);
    const ScalarField pt = pressure_variation(prob, g).solution;
    const double numeric = force_variation(pt);
    const double predicted = predicted_force_variation(prob);
    EXPECT_LE(std::abs(numeric - predicted), 2e-3 * absolute_force_variation(pt)) << "trial " << trial;
  }
}

TEST(GreenChain, OrthogonalVariationLeavesForceUnchanged) {
  const EllipticContactSolution base = make_problem({}).base;
  const Field2 raw = bump(0.5, 4.0, -2.0, 5.0);
  const WeightFunction rho{WeightKind::rho, base.domain};
  const double num = integrate_ellipse(base.domain, [&](Vec2 y) { return raw(y) * weight_eval(rho, y); });
  const double den = integrate_ellipse(base.domain, [&](Vec2 y) { return weight_eval(rho, y); });
  const Field2 orth = raw.affine(1.0, -num / den);
  const SensitivityProblem prob{base, {{kLayer, orth}, {kLayer, orth}}};
  EXPECT_LE(std::abs(orthogonality_residual(prob.layers, base.domain)), 1e-12);
  const ScalarField pt = pressure_variation(prob, DiskGrid(128)).solution;
  EXPECT_LE(std::abs(force_variation(pt)), 1e-3 * absolute_force_variation(pt));
}

TEST(GapVariation, Oracles) {
  const EllipseDomain d(2.0, 1.5);
  EXPECT_EQ(gap_variation_residual(Field2::constant(0.0), d), 0.0);
  EXPECT_LT(oracle::rel(gap_variation_residual(Field2::polynomial(theta_polynomial(2.0, 1.5)), d),
                        oracle::theta_squared_integral(2.0, 1.5)),
            1e-12);
  // y1^2 - a1^2/6 is theta*-orthogonal; its companion solve carries no force.
  const Field2 phi = Field2::polynomial(Polynomial2::monomial(1.0, 2, 0) - Polynomial2::constant(4.0 / 6.0));
  EXPECT_NEAR(gap_variation_residual(phi, d), 0.0, 1e-12);
  const ScalarField pt = gap_pressure_variation(0.7, phi, d, DiskGrid(128)).solution;
  EXPECT_LE(std::abs(force_variation(pt)), 1e-3 * absolute_force_variation(pt));
  EXPECT_THROW(gap_pressure_variation(0.0, phi, d, DiskGrid(32)), DomainError);
}

TEST(PressureVariation, ParityPropagates) {
  // Htilde odd in y1 gives p~ odd in y1.
  const SensitivityProblem prob = make_problem({{kLayer, Field2::polynomial(Polynomial2::monomial(0.01, 1, 0))}});
  const ScalarField pt = pressure_variation(prob, DiskGrid(64)).solution;
  const DiskGrid& g = pt.grid();
  double scale = 0.0;
  for (double v : pt.values()) scale = std::max(scale, std::abs(v));
  for (int j = 0; j < g.side(); ++j)
    for (int i = 0; i < g.side(); ++i) EXPECT_NEAR(pt.at(i, j), -pt.at(g.cells() - i, j), 1e-10 * scale);
}
