#include "thinlayer/types.hpp"

#include <numbers>

#include "thinlayer/errors.hpp"

namespace thinlayer {

double gap_eval(const ParaboloidGap& gap, Vec2 y) {
  return y.y1 * y.y1 / (2.0 * gap.R1) + y.y2 * y.y2 / (2.0 * gap.R2);
}

double ParaboloidGap::interference(Vec2 y) const { return delta0 - gap_eval(*this, y); }

EllipseDomain::EllipseDomain(double a1, double a2) : a1_(a1), a2_(a2) {
  if (!(a1 > 0.0) || !(a2 > 0.0) || !std::isfinite(a1) || !std::isfinite(a2)) {
    throw DomainError("ellipse semi-axes must be positive and finite");
  }
}

double EllipseDomain::area() const { return std::numbers::pi * a1_ * a2_; }

double EllipseDomain::theta(Vec2 y) const {
  const double u = y.y1 / a1_;
  const double v = y.y2 / a2_;
  return 1.0 - u * u - v * v;
}

EllipseDomain EllipseDomain::scaled(double kappa) const {
  if (!(kappa > 0.0)) throw DomainError("domain scale factor must be positive");
  return EllipseDomain(kappa * a1_, kappa * a2_);
}

}  // namespace thinlayer
