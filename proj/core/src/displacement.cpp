#include "thinlayer/displacement.hpp"

#include "thinlayer/errors.hpp"

namespace thinlayer {

DisplacementProfile::DisplacementProfile(const Material& material, double h_star, Field2 pressure,
                                         Field2 variation_star)
    : lambda_(material.lambda()),
      mu_(material.mu()),
      M_(material.p_modulus()),
      h_star_(h_star),
      pressure_(std::move(pressure)),
      variation_star_(std::move(variation_star)) {
  if (!(mu_ > 0.0)) throw DomainError("shear modulus must be positive");
  if (!(h_star_ > 0.0)) throw DomainError("h* must be positive");
}

DisplacementProfile::Derivs DisplacementProfile::derivs(Vec2 y) const {
  return {pressure_.jet(y), variation_star_.jet(y), laplacian_of_product(pressure_, variation_star_, y),
          div_weighted_grad_at(variation_star_, pressure_, y)};
}

double DisplacementProfile::w0(Vec2 y, double zeta) const { return pressure_(y) * (h_star_ - zeta) / M_; }

double DisplacementProfile::w1(Vec2 y, double /*zeta*/) const {
  return pressure_(y) * variation_star_(y) / M_;
}

double DisplacementProfile::w2(Vec2 y, double zeta) const {
  const double lap_p = pressure_.jet(y).laplacian();
  const double h = h_star_;
  const double l = lambda_;
  const double m = mu_;
  return lap_p / (6.0 * m * M_ * M_) *
         (3.0 * l * m * h * (zeta * zeta - h * h) - l * M_ * (zeta * zeta * zeta - h * h * h) -
          3.0 * l * (m - l) * h * h * (zeta - h));
}

double DisplacementProfile::dw2(Vec2 y, double zeta) const {
  const double lap_p = pressure_.jet(y).laplacian();
  const double h = h_star_;
  const double l = lambda_;
  const double m = mu_;
  return lap_p / (6.0 * m * M_ * M_) *
         (6.0 * l * m * h * zeta - 3.0 * l * M_ * zeta * zeta - 3.0 * l * (m - l) * h * h);
}

double DisplacementProfile::w3(Vec2 y, double zeta) const {
  const Derivs d = derivs(y);
  return lambda_ * d.lap_pH * zeta * zeta / (2.0 * M_ * M_) + c1(y) * zeta + c0(y);
}

Vec2 DisplacementProfile::v0(Vec2 /*y*/, double /*zeta*/) const { return {0.0, 0.0}; }

Vec2 DisplacementProfile::v1(Vec2 y, double zeta) const { return Psi(zeta) * pressure_.jet(y).grad(); }

Vec2 DisplacementProfile::v2(Vec2 y, double zeta) const {
  const Derivs d = derivs(y);
  // grad(p H) = H grad p + p grad H.
  const Vec2 grad_pH = d.H.v * d.p.grad() + d.p.v * d.H.grad();
  return (h_star_ - zeta) / M_ * grad_pH - lambda_ * h_star_ / (mu_ * M_) * d.H.v * d.p.grad();
}

double DisplacementProfile::Psi(double zeta) const {
  const double h = h_star_;
  return -(lambda_ + mu_) * (h * h - zeta * zeta) / (2.0 * mu_ * M_) + h * (h - zeta) / M_;
}

double DisplacementProfile::dPsi(double zeta) const {
  return (lambda_ + mu_) * zeta / (mu_ * M_) - h_star_ / M_;
}

double DisplacementProfile::c1(Vec2 y) const {
  const Derivs d = derivs(y);
  return lambda_ * h_star_ / (mu_ * M_ * M_) * (lambda_ * d.div_H_grad_p - mu_ * d.lap_pH);
}

double DisplacementProfile::c0(Vec2 y) const {
  const Derivs d = derivs(y);
  const double h2 = h_star_ * h_star_;
  return lambda_ * h2 / (2.0 * M_ * M_) * (d.H.v * d.p.laplacian() + d.lap_pH) -
         lambda_ * lambda_ * h2 / (mu_ * M_ * M_) * d.div_H_grad_p;
}

double DisplacementProfile::c0_expanded(Vec2 y) const {
  const Jet p = pressure_.jet(y);
  const Jet H = variation_star_.jet(y);
  const double h2 = h_star_ * h_star_;
  const double A = lambda_ * (lambda_ - mu_) / (mu_ * M_ * M_);
  const double B = lambda_ / (M_ * M_);
  return -A * h2 * (dot(H.grad(), p.grad()) + H.v * p.laplacian()) + 0.5 * B * h2 * p.v * H.laplacian();
}

DisplacementProfile displacement_profiles(const Material& material, const LayerThickness& layer,
                                          const Field2& pressure) {
  return {material, layer.h_star(), pressure, layer.variation_star()};
}

SurfaceExpansion surface_displacement_expansion(const Material& material, const LayerThickness& layer,
                                                const Field2& pressure, Vec2 y) {
  const DisplacementProfile prof = displacement_profiles(material, layer, pressure);
  const double e = layer.eps();
  SurfaceExpansion out;
  out.leading = e * prof.w0(y, 0.0);
  out.thickness = e * e * prof.w1(y, 0.0);
  out.bending = e * e * e * prof.w2(y, 0.0);
  out.coupling = e * e * e * e * prof.c0(y);
  return out;
}

}  // namespace thinlayer
