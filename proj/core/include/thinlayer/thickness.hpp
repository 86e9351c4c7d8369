#pragma once

#include "thinlayer/field.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// Layer of variable thickness H(y) = h + Htilde(y), with the thin-layer
// scaling h = eps h*, Htilde = eps^2 h* psi*.
class LayerThickness {
 public:
  LayerThickness(double h, double eps, Field2 variation);

  static LayerThickness uniform(double h, double eps) { return {h, eps, Field2::constant(0.0)}; }

  double h() const { return h_; }
  double eps() const { return eps_; }
  double h_star() const { return h_ / eps_; }

  // Htilde(y), physical length.
  const Field2& variation() const { return variation_; }
  // Htilde*(y) = Htilde / eps^2 = h* psi*(y).
  Field2 variation_star() const;
  // psi*(y) = Htilde / (eps^2 h*), dimensionless.
  Field2 psi_star() const;

  double thickness(Vec2 y) const { return h_ + variation_(y); }
  Field2 thickness_field() const { return variation_.affine(1.0, h_); }

 private:
  double h_;
  double eps_;
  Field2 variation_;
};

// Splits H into h + Htilde and checks H > 0 on the lattice nodes of the
// closed domain (DomainError otherwise).
LayerThickness thickness_decompose(const Field2& H, double h, double eps, const EllipseDomain& domain,
                                   int check_cells = 64);

// Same, with eps = max |H - h| / h taken over the checked nodes (eps = 1
// when H is constant).
LayerThickness thickness_decompose(const Field2& H, double h, const EllipseDomain& domain,
                                   int check_cells = 64);

}  // namespace thinlayer
