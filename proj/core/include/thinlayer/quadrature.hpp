#pragma once

#include <functional>
#include <vector>

#include "thinlayer/grid.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule mapped to [0, 1].
GaussRule gauss_legendre_unit(int n);

// Tensor rule on the mapped disk: Gauss-Legendre in radius times the
// trapezoid rule in angle. Exact for the polynomial weights used here once
// radial >= (degree + 2) / 2 and angular > degree.
struct PolarRule {
  int radial = 64;
  int angular = 256;

  // Rule matched to a lattice with `cells` intervals per side.
  static PolarRule for_resolution(int cells);
};

// Integral over the ellipse via y = (a1 r cos t, a2 r sin t).
double integrate_ellipse(const EllipseDomain& domain, const std::function<double(Vec2)>& f,
                         const PolarRule& rule = {});

// Integral of a grid field. Extended fields use the polar rule on the
// fourth-order lattice interpolant; disk-supported fields (vanishing on the
// contour) use masked node summation.
double integrate_ellipse(const ScalarField& f);

}  // namespace thinlayer
