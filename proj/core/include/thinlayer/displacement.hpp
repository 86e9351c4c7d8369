#pragma once

#include "thinlayer/elastic.hpp"
#include "thinlayer/field.hpp"
#include "thinlayer/thickness.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// Through-thickness displacement terms of the thin-layer expansion in
// stretched variables (y, zeta), zeta in [0, h*]; zeta = 0 is the contact
// surface and zeta = h* the bonded substrate. `pressure` is p(y) and the
// variation is Htilde*(y).
class DisplacementProfile {
 public:
  DisplacementProfile(const Material& material, double h_star, Field2 pressure, Field2 variation_star);

  double h_star() const { return h_star_; }

  // Normal displacement terms.
  double w0(Vec2 y, double zeta) const;
  double w1(Vec2 y, double zeta) const;
  double w2(Vec2 y, double zeta) const;
  double dw2(Vec2 y, double zeta) const;
  double w3(Vec2 y, double zeta) const;
  double w3_surface(Vec2 y) const { return c0(y); }

  // Tangential displacement terms.
  Vec2 v0(Vec2 y, double zeta) const;
  Vec2 v1(Vec2 y, double zeta) const;
  Vec2 v2(Vec2 y, double zeta) const;

  // v1 = Psi(zeta) grad p.
  double Psi(double zeta) const;
  double dPsi(double zeta) const;

  double c1(Vec2 y) const;
  // Surface value of w3 in the bracket form
  //   lambda h*^2/(2 (2mu+lambda)^2) [H lap p + lap(p H)]
  //     - lambda^2 h*^2/(mu (2mu+lambda)^2) div(H grad p).
  double c0(Vec2 y) const;
  // Same quantity after expanding lap(p H):
  //   -A h*^2 [grad H . grad p + H lap p] + B h*^2/2 p lap H.
  double c0_expanded(Vec2 y) const;

 private:
  struct Derivs {
    Jet p;
    Jet H;
    double lap_pH;
    double div_H_grad_p;
  };
  Derivs derivs(Vec2 y) const;

  double lambda_;
  double mu_;
  double M_;
  double h_star_;
  Field2 pressure_;
  Field2 variation_star_;
};

DisplacementProfile displacement_profiles(const Material& material, const LayerThickness& layer,
                                          const Field2& pressure);

// Four terms of the contact-surface displacement w(y, 0) with the powers of
// eps applied.
struct SurfaceExpansion {
  double leading = 0.0;
  double thickness = 0.0;
  double bending = 0.0;
  double coupling = 0.0;
  double total() const { return leading + thickness + bending + coupling; }
};

SurfaceExpansion surface_displacement_expansion(const Material& material, const LayerThickness& layer,
                                                const Field2& pressure, Vec2 y);

}  // namespace thinlayer
