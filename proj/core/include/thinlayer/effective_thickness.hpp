#pragma once

#include <array>

#include "thinlayer/field.hpp"
#include "thinlayer/grid.hpp"
#include "thinlayer/quadrature.hpp"
#include "thinlayer/sensitivity.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

struct EffectiveThicknessResult {
  double h_eff = 0.0;
  // Integral of (H - h_eff)^2 w over omega*.
  double criterion = 0.0;
  WeightKind weight_kind = WeightKind::rho_star;
  double weight_integral = 0.0;
};

// Integral over the weight's ellipse of f w.
double weighted_integral(const Field2& f, const WeightFunction& w, const PolarRule& rule = {});

// Weighted mean of H over omega*; the minimizer of criterion_value in h.
// kind must be rho_star, theta_star or uniform. Throws DomainError when H
// is not positive on the quadrature nodes or the weight integrates to <= 0.
EffectiveThicknessResult effective_thickness(const Field2& H, const EllipseDomain& omega_star, WeightKind kind,
                                             const PolarRule& rule = {});

double criterion_value(const Field2& H, double h, const EllipseDomain& omega_star, WeightKind kind,
                       const PolarRule& rule = {});

// Htilde = H - h_eff as a field, and sampled on a lattice.
Field2 orthogonalized_variation(const Field2& H, double h_eff);
ScalarField orthogonalize_variation(const Field2& H, double h_eff, const EllipseDomain& domain,
                                    const DiskGrid& grid);

// Location of the weight's maximum along the mapped ray at `angle`, in
// mapped radius (0 = centre, 1 = contour).
double radial_argmax(const WeightFunction& w, double angle = 0.0);

struct WeightComparison {
  struct Entry {
    WeightKind kind;
    double h_eff;
    double criterion;
    double radial_argmax;
  };
  double kappa = 1.0;
  EllipseDomain omega_star{1.0, 1.0};
  std::array<Entry, 3> entries{};
};

// Effective thickness under rho*, theta* and uniform weights on
// omega* = kappa * omega, kappa in (0, 1].
WeightComparison compare_weights(const Field2& H, const EllipseDomain& omega, double kappa = 1.0,
                                 const PolarRule& rule = {});

}  // namespace thinlayer
