#pragma once

#include <span>
#include <vector>

#include "thinlayer/field.hpp"
#include "thinlayer/grid.hpp"
#include "thinlayer/incompressible.hpp"
#include "thinlayer/poisson.hpp"
#include "thinlayer/quadrature.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// Thickness variation Htilde_alpha of one layer with its (E, h).
struct LayerVariation {
  LayerSpec spec;
  Field2 variation;
};

// Linearization about the elliptic contact solution p_bar on its own
// ellipse omega (the perturbed contour is not tracked).
struct SensitivityProblem {
  EllipticContactSolution base;
  std::vector<LayerVariation> layers;
  double m() const { return base.m; }
};

enum class RhsForm {
  // Face-averaged Htilde times centred flux differences of sampled p_bar.
  flux,
  // grad Htilde . grad p_bar + Htilde lap p_bar from exact field derivatives.
  product_rule,
};

// lap p~ = -m sum_alpha (3 h_alpha^2 / E_alpha) div(Htilde_alpha grad p_bar).
ScalarField sensitivity_rhs(const SensitivityProblem& prob, const DiskGrid& grid, RhsForm form = RhsForm::flux);

// p~ with p~ = 0 on the contour.
PoissonResult pressure_variation(const SensitivityProblem& prob, const DiskGrid& grid,
                                 RhsForm form = RhsForm::flux, const PoissonOptions& options = {});

// Integral of p~ over its ellipse.
double force_variation(const ScalarField& p_tilde);
// Integral of |p~|, the scale against which force_variation is judged.
double absolute_force_variation(const ScalarField& p_tilde);

enum class WeightKind {
  // (s y1^2/a1^2 + y2^2/(s a2^2)) theta on the contact ellipse.
  rho,
  // Same form on a characteristic ellipse omega*.
  rho_star,
  // theta on omega*.
  theta_star,
  // 1 on omega*.
  uniform,
};

const char* weight_name(WeightKind kind);

struct WeightFunction {
  WeightKind kind = WeightKind::rho_star;
  EllipseDomain domain{1.0, 1.0};
};

// Weight value; zero outside the weight's ellipse.
double weight_eval(const WeightFunction& w, Vec2 y);

// sum_alpha h_alpha^2/E_alpha * integral over omega of Htilde_alpha rho.
double orthogonality_residual(std::span<const LayerVariation> layers, const EllipseDomain& omega,
                              const PolarRule& rule = {});

// Integral of p~ implied by the Green-identity chain without solving:
//   -24 m C p0 / (a1 a2) * orthogonality_residual, C = a1^2 a2^2/(2(a1^2+a2^2)).
double predicted_force_variation(const SensitivityProblem& prob, const PolarRule& rule = {});

// Contour integral of theta n . grad p_bar sum_alpha (h^2/E) Htilde_alpha,
// by the trapezoid rule on `samples` contour points. Vanishes because theta
// does on the contour.
double boundary_flux_term(const SensitivityProblem& prob, int samples = 4096);

// Integral over omega* of phi~ theta*.
double gap_variation_residual(const Field2& phi_tilde, const EllipseDomain& omega_star,
                              const PolarRule& rule = {});

// Companion solve m^-1 lap p~ = phi~ with p~ = 0 on the contour.
PoissonResult gap_pressure_variation(double m, const Field2& phi_tilde, const EllipseDomain& omega,
                                     const DiskGrid& grid, const PoissonOptions& options = {});

}  // namespace thinlayer
