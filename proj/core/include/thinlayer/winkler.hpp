#pragma once

#include "thinlayer/elastic.hpp"
#include "thinlayer/grid.hpp"
#include "thinlayer/quadrature.hpp"
#include "thinlayer/thickness.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// Compressible thin layer as a Winkler foundation of variable modulus
// k(y) = (2 mu + lambda) / H(y).

double winkler_modulus(const Material& material, const LayerThickness& layer, Vec2 y);

// k(y) (delta0 - phi(y))_+.
double winkler_pressure(const Material& material, const LayerThickness& layer, const ParaboloidGap& gap,
                        Vec2 y);

// Ellipse a_alpha = sqrt(2 R_alpha delta0) where delta0 = phi. Throws
// NoContact for delta0 <= 0.
EllipseDomain winkler_contact_region(const ParaboloidGap& gap);

// Total force over the contact ellipse by the polar rule.
double winkler_force(const Material& material, const LayerThickness& layer, const ParaboloidGap& gap,
                     const PolarRule& rule = PolarRule::for_resolution(256));

struct WinklerSolution {
  EllipseDomain contact_ellipse;
  ScalarField pressure;
  ScalarField modulus;
  double force;
  double peak_pressure;
};

WinklerSolution winkler_solve(const Material& material, const LayerThickness& layer, const ParaboloidGap& gap,
                              const DiskGrid& grid);

}  // namespace thinlayer
