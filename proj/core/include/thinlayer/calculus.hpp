#pragma once

#include "thinlayer/grid.hpp"

namespace thinlayer {

struct VectorField {
  ScalarField d1;
  ScalarField d2;
};

// Centered second-order differences in mapped coordinates with the chain
// rule factors 1/a1, 1/a2 (1/a1^2, 1/a2^2 for second derivatives); one-sided
// second-order stencils on the outer edge of the square lattice.
ScalarField field_laplacian(const ScalarField& f);
VectorField field_gradient(const ScalarField& f);

// div(w grad f) in conservative flux form: face-averaged w times centred
// flux differences. Reduces to field_laplacian for w = 1.
ScalarField div_weighted_grad(const ScalarField& w, const ScalarField& f);

}  // namespace thinlayer
