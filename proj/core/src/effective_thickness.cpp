#include "thinlayer/effective_thickness.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "thinlayer/errors.hpp"

namespace thinlayer {

namespace {

void require_optimizer_weight(WeightKind kind) {
  if (kind == WeightKind::rho) {
    throw DomainError("effective thickness uses rho_star, theta_star or uniform weights on omega*");
  }
}

void require_positive(const Field2& H, const EllipseDomain& omega_star, const PolarRule& rule) {
  // Probe the same nodes the quadrature visits plus the centre.
  const GaussRule radial = gauss_legendre_unit(rule.radial);
  const double dt = 2.0 * std::numbers::pi / rule.angular;
  auto check = [&](Vec2 y) {
    const double v = H(y);
    if (!(v > 0.0)) {
      std::ostringstream os;
      os << "thickness must be positive on omega*, H(" << y.y1 << ", " << y.y2 << ") = " << v;
      throw DomainError(os.str());
    }
  };
  check({0.0, 0.0});
  for (int l = 0; l < rule.angular; ++l) {
    for (double r : radial.nodes) {
      check(omega_star.from_unit({r * std::cos(dt * l), r * std::sin(dt * l)}));
    }
  }
}

}  // namespace

double weighted_integral(const Field2& f, const WeightFunction& w, const PolarRule& rule) {
  return integrate_ellipse(w.domain, [&](Vec2 y) { return f(y) * weight_eval(w, y); }, rule);
}

EffectiveThicknessResult effective_thickness(const Field2& H, const EllipseDomain& omega_star, WeightKind kind,
                                             const PolarRule& rule) {
  require_optimizer_weight(kind);
  require_positive(H, omega_star, rule);
  const WeightFunction w{kind, omega_star};
  const double mass = weighted_integral(Field2::constant(1.0), w, rule);
  if (!(mass > 0.0)) throw DomainError("weight integrates to a non-positive value");
  const double h_eff = weighted_integral(H, w, rule) / mass;
  return {h_eff, criterion_value(H, h_eff, omega_star, kind, rule), kind, mass};
}

double criterion_value(const Field2& H, double h, const EllipseDomain& omega_star, WeightKind kind,
                       const PolarRule& rule) {
  require_optimizer_weight(kind);
  const WeightFunction w{kind, omega_star};
  return integrate_ellipse(
      omega_star,
      [&](Vec2 y) {
        const double d = H(y) - h;
        return d * d * weight_eval(w, y);
      },
      rule);
}

Field2 orthogonalized_variation(const Field2& H, double h_eff) { return H.affine(1.0, -h_eff); }

ScalarField orthogonalize_variation(const Field2& H, double h_eff, const EllipseDomain& domain,
                                    const DiskGrid& grid) {
  return ScalarField::sample(domain, grid, orthogonalized_variation(H, h_eff));
}

double radial_argmax(const WeightFunction& w, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto negated = [&](double r) { return -weight_eval(w, w.domain.from_unit({r * c, r * s})); };
  const int bits = std::numeric_limits<double>::digits / 2;
  const auto [r, value] = boost::math::tools::brent_find_minima(negated, 0.0, 1.0, bits);
  // Centre at least as high as the located optimum (flat or decreasing
  // profiles): report the centre itself.
  if (negated(0.0) <= value) return 0.0;
  return r;
}

WeightComparison compare_weights(const Field2& H, const EllipseDomain& omega, double kappa, const PolarRule& rule) {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    std::ostringstream os;
    os << "omega* scale kappa must lie in (0, 1], got " << kappa;
    throw DomainError(os.str());
  }
  WeightComparison out;
  out.kappa = kappa;
  out.omega_star = omega.scaled(kappa);
  const WeightKind kinds[] = {WeightKind::rho_star, WeightKind::theta_star, WeightKind::uniform};
  for (std::size_t k = 0; k < 3; ++k) {
    const EffectiveThicknessResult r = effective_thickness(H, out.omega_star, kinds[k], rule);
    out.entries[k] = {kinds[k], r.h_eff, r.criterion, radial_argmax({kinds[k], out.omega_star})};
  }
  return out;
}

}  // namespace thinlayer
