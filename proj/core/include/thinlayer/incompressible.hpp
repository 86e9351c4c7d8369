#pragma once

#include <span>
#include <vector>

#include "thinlayer/field.hpp"
#include "thinlayer/grid.hpp"
#include "thinlayer/polynomial.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

struct LayerSpec {
  double E = 1.0;
  double h = 1.0;
};

// m = (sum_alpha h_alpha^3 / E_alpha)^-1. Layers with h = 0 contribute
// nothing; all-zero thickness is a DomainError.
double aggregate_compliance(std::span<const LayerSpec> layers);

struct BilayerConfig {
  LayerSpec layer1;
  LayerSpec layer2;
  double m() const;
};

// p(y) = p0 theta(y)^2 on the ellipse (a1, a2).
struct EllipticContactSolution {
  double p0 = 0.0;
  EllipseDomain domain{1.0, 1.0};
  double force = 0.0;
  double M_P = 0.0;
  double s = 1.0;
  double m = 1.0;
  ParaboloidGap gap;

  Polynomial2 pressure_polynomial() const;
  Field2 pressure_field() const;
};

// Relative residuals of the three matched coefficients (constant, y1^2,
// y2^2) of -m^-1 lap p = delta0 - phi.
struct MatchingResiduals {
  double constant = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double max() const;
};

MatchingResiduals matching_residuals(double p0, double a1, double a2, double m, const ParaboloidGap& gap);

// g(s) = s^2 (3 s^2 + 1) / (s^2 + 3); the aspect ratio s = a2/a1 solves
// g(s) = R2/R1.
double aspect_ratio_equation(double s);

EllipticContactSolution elliptic_contact_solve(double m, const ParaboloidGap& gap);

// p0 theta^2 inside the ellipse, 0 outside.
double elliptic_pressure_eval(const EllipticContactSolution& sol, Vec2 y);

struct ForceLaw {
  double P = 0.0;
  double M_P = 0.0;
};

// P = pi a1 a2 p0 / 3 and M_P = 3 P / (pi m R1 R2 delta0^3).
ForceLaw contact_force_and_MP(const EllipticContactSolution& sol, double m, const ParaboloidGap& gap);

// -m^-1 lap p - (delta0 - phi) at y with the symbolic Laplacian.
double pde_residual(const EllipticContactSolution& sol, Vec2 y);

// Per-layer input of the refined displacement: u3 contribution
//   -h^3/E lap p - 3 h^2/E div(Htilde grad p).
struct RefinedLayer {
  LayerSpec spec;
  ScalarField variation;
};

ScalarField refined_surface_displacement(const LayerSpec& layer, const ScalarField& p,
                                         const ScalarField& variation);
// Sum of the layer contributions.
ScalarField refined_surface_displacement(std::span<const RefinedLayer> layers, const ScalarField& p);
// Pointwise version on smooth fields (exact derivatives for polynomial and
// jet-backed inputs).
double refined_surface_displacement_at(const LayerSpec& layer, const Field2& p, const Field2& variation, Vec2 y);

// Elastic combinations of the surface displacement terms:
//   A = lambda (lambda - mu) / (mu (2mu+lambda)^2),
//   B = lambda / (2mu+lambda)^2,
//   C = lambda^2 / (mu (2mu+lambda)^2).
struct LimitCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

// Engineering-constant forms, finite at nu = 0.5 (A = C = 3/E, B = 0).
LimitCoefficients incompressible_limit_coefficients(double E, double nu);
LimitCoefficients limit_coefficients_lame(double lambda, double mu);

// Surface term of w3 at nu = 0.5: -3 h*^2 / E div(Htilde* grad p).
double c0_incompressible(double E, double h_star, const Field2& variation_star, const Field2& pressure, Vec2 y);

}  // namespace thinlayer
