#pragma once

#include "thinlayer/grid.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

struct PoissonOptions {
  // Stop when ||b - A u|| <= rel_tol * ||b||.
  double rel_tol = 1e-10;
  // Iteration budget; 0 selects 50 * (lattice points per side).
  int max_iterations = 0;
};

struct PoissonResult {
  ScalarField solution;
  int iterations = 0;
  double relative_residual = 0.0;
};

// Solves lap u = rhs on the ellipse with u = 0 on its contour. The unknowns
// are the lattice nodes strictly inside the mapped unit disk; a grid line
// crossing the contour at fractional distance theta couples to the boundary
// value with weight 1/(theta h^2), which keeps the operator symmetric
// negative definite. Solved by Jacobi-preconditioned conjugate gradients.
// The solution has disk support (zero outside). Throws SolverError when the
// budget is exhausted and ShapeError when rhs lives on another domain.
PoissonResult poisson_solve_dirichlet(const EllipseDomain& domain, const ScalarField& rhs,
                                      const PoissonOptions& options = {});

}  // namespace thinlayer
