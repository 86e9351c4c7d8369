#pragma once

#include "thinlayer/elastic.hpp"
#include "thinlayer/field.hpp"
#include "thinlayer/grid.hpp"
#include "thinlayer/thickness.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// One coefficient sigma_k split into the part built from powers of psi*
// alone and the part carrying the h*^2 bending corrections.
struct SeriesTerm {
  double thickness_part = 0.0;
  double bending_part = 0.0;
  double total() const { return thickness_part + bending_part; }
};

// Four-term perturbation solution for the compressible layer,
//   p ~ (2 mu + lambda)/h* (sigma0 + eps sigma1 + eps^2 sigma2 + eps^3 sigma3),
// in starred variables: f* = delta0* - phi*(y), psi*(y).
class PerturbationSeries {
 public:
  PerturbationSeries(const Material& material, double h_star, double eps, Field2 f_star, Field2 psi_star);

  const Material& material() const { return material_; }
  double h_star() const { return h_star_; }
  double eps() const { return eps_; }
  const Field2& f_star() const { return f_star_; }
  const Field2& psi_star() const { return psi_star_; }

  // (2 mu + lambda) / h*.
  double prefactor() const;
  // h*^2 lambda (lambda - mu) / (3 mu (2 mu + lambda)).
  double bending_coefficient() const;
  // h*^2 lambda (2 lambda + mu) / (6 mu (2 mu + lambda)).
  double curvature_coefficient() const;
  // h*^2 lambda / (2 mu (2 mu + lambda)), the eps^3 factor of the balance.
  double coupling_coefficient() const;

  SeriesTerm sigma(int k, Vec2 y) const;
  // sigma3 before simplification with the product-rule identities.
  double sigma3_expanded(Vec2 y) const;

  PerturbationSeries with_eps(double eps) const;

 private:
  Material material_;
  double h_star_;
  double eps_;
  Field2 f_star_;
  Field2 psi_star_;
};

// Builds the series from physical inputs: f* = (delta0 - phi)/eps and
// psi* from the layer decomposition. Compressible materials only.
PerturbationSeries perturbation_coefficients(const Material& material, const LayerThickness& layer,
                                             const ParaboloidGap& gap);

double perturbation_pressure(const PerturbationSeries& series, Vec2 y);

// Max-norm residual of the pressure balance
//   p + eps psi p - eps^2 K lap p
//     + eps^3 L {mu [psi lap p + lap(p psi)] - 2 lambda div(psi grad p)}
//     - (2 mu + lambda)/h* f*
// with p from the series and all derivatives taken by lattice differences,
// over the nodes of `region` within 90% of its mapped radius.
double residual_check(const PerturbationSeries& series, const EllipseDomain& region, const DiskGrid& grid);

}  // namespace thinlayer
