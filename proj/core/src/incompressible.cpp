#include "thinlayer/incompressible.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thinlayer/calculus.hpp"
#include "thinlayer/errors.hpp"

namespace thinlayer {

double aggregate_compliance(std::span<const LayerSpec> layers) {
  double sum = 0.0;
  for (const LayerSpec& l : layers) {
    if (!(l.E > 0.0)) throw DomainError("layer Young's modulus must be positive");
    if (!(l.h >= 0.0)) throw DomainError("layer thickness must be non-negative");
    sum += l.h * l.h * l.h / l.E;
  }
  if (!(sum > 0.0)) throw DomainError("at least one layer must have positive thickness");
  return 1.0 / sum;
}

double BilayerConfig::m() const {
  const LayerSpec layers[] = {layer1, layer2};
  return aggregate_compliance(layers);
}

Polynomial2 EllipticContactSolution::pressure_polynomial() const {
  return p0 * pow(theta_polynomial(domain.a1(), domain.a2()), 2);
}

Field2 EllipticContactSolution::pressure_field() const { return Field2::polynomial(pressure_polynomial()); }

double MatchingResiduals::max() const { return std::max({std::abs(constant), std::abs(y1), std::abs(y2)}); }

MatchingResiduals matching_residuals(double p0, double a1, double a2, double m, const ParaboloidGap& gap) {
  const double S = 1.0 / (a1 * a1) + 1.0 / (a2 * a2);
  const double c0 = 4.0 * p0 * S / m;
  const double c1 = 4.0 * p0 * (S + 2.0 / (a1 * a1)) / (m * a1 * a1);
  const double c2 = 4.0 * p0 * (S + 2.0 / (a2 * a2)) / (m * a2 * a2);
  const double t1 = 1.0 / (2.0 * gap.R1);
  const double t2 = 1.0 / (2.0 * gap.R2);
  return {(c0 - gap.delta0) / gap.delta0, (c1 - t1) / t1, (c2 - t2) / t2};
}

double aspect_ratio_equation(double s) {
  const double s2 = s * s;
  return s2 * (3.0 * s2 + 1.0) / (s2 + 3.0);
}

namespace {

double aspect_ratio_derivative(double s) {
  const double s2 = s * s;
  const double d = s2 + 3.0;
  return (6.0 * s2 * s2 * s + 36.0 * s2 * s + 6.0 * s) / (d * d);
}

constexpr double kMatchTolerance = 1e-10;

}  // namespace

EllipticContactSolution elliptic_contact_solve(double m, const ParaboloidGap& gap) {
  if (!(m > 0.0)) throw DomainError("aggregate coefficient m must be positive");
  if (!(gap.R1 > 0.0) || !(gap.R2 > 0.0)) throw DomainError("curvature radii must be positive");
  if (!(gap.delta0 > 0.0)) {
    std::ostringstream os;
    os << "no contact: approach delta0 = " << gap.delta0 << " must be positive";
    throw NoContact(os.str());
  }
  const double t = gap.R2 / gap.R1;
  if (t < 1e-3 || t > 1e3) {
    std::ostringstream os;
    os << "unsupported curvature ratio R1/R2 = " << gap.R1 / gap.R2 << " (supported range [1e-3, 1e3])";
    throw DomainError(os.str());
  }

  const double lo = std::sqrt(std::min(t, 1.0)) * 0.1;
  const double hi = std::sqrt(std::max(t, 1.0)) * 10.0;
  const double guess = std::pow(t, 0.25);
  std::uintmax_t iterations = 200;
  const double s = boost::math::tools::newton_raphson_iterate(
      [t](double x) { return std::make_pair(aspect_ratio_equation(x) - t, aspect_ratio_derivative(x)); }, guess,
      lo, hi, 52, iterations);

  const double s2 = s * s;
  const double a1 = std::sqrt(2.0 * gap.R1 * gap.delta0 * (3.0 * s2 + 1.0) / (s2 + 1.0));
  const double a2 = s * a1;
  const double S = 1.0 / (a1 * a1) + 1.0 / (a2 * a2);
  const double p0 = m * gap.delta0 / (4.0 * S);

  const MatchingResiduals res = matching_residuals(p0, a1, a2, m, gap);
  if (!(res.max() <= kMatchTolerance)) {
    std::ostringstream os;
    os.precision(3);
    os << "aspect-ratio solve did not converge after " << iterations << " iterations (s = " << s
       << "); matched-coefficient residuals: constant " << res.constant << ", y1^2 " << res.y1 << ", y2^2 "
       << res.y2;
    throw SolverError(os.str());
  }

  EllipticContactSolution sol;
  sol.p0 = p0;
  sol.domain = EllipseDomain(a1, a2);
  sol.s = s;
  sol.m = m;
  sol.gap = gap;
  const ForceLaw law = contact_force_and_MP(sol, m, gap);
  sol.force = law.P;
  sol.M_P = law.M_P;
  return sol;
}

double elliptic_pressure_eval(const EllipticContactSolution& sol, Vec2 y) {
  const double th = sol.domain.theta(y);
  return th > 0.0 ? sol.p0 * th * th : 0.0;
}

ForceLaw contact_force_and_MP(const EllipticContactSolution& sol, double m, const ParaboloidGap& gap) {
  const double P = std::numbers::pi * sol.domain.a1() * sol.domain.a2() * sol.p0 / 3.0;
  const double d3 = gap.delta0 * gap.delta0 * gap.delta0;
  return {P, 3.0 * P / (std::numbers::pi * m * gap.R1 * gap.R2 * d3)};
}

double pde_residual(const EllipticContactSolution& sol, Vec2 y) {
  const double lap = sol.pressure_polynomial().laplacian()(y);
  return -lap / sol.m - sol.gap.interference(y);
}

ScalarField refined_surface_displacement(const LayerSpec& layer, const ScalarField& p,
                                         const ScalarField& variation) {
  require_same_lattice(p, variation);
  if (!(layer.E > 0.0)) throw DomainError("layer Young's modulus must be positive");
  const double h = layer.h;
  const ScalarField bend = field_laplacian(p);
  const ScalarField couple = div_weighted_grad(variation, p);
  return (-h * h * h / layer.E) * bend + (-3.0 * h * h / layer.E) * couple;
}

ScalarField refined_surface_displacement(std::span<const RefinedLayer> layers, const ScalarField& p) {
  ScalarField total = ScalarField::zeros(p.domain(), p.grid());
  for (const RefinedLayer& l : layers) total = total + refined_surface_displacement(l.spec, p, l.variation);
  return total;
}

double refined_surface_displacement_at(const LayerSpec& layer, const Field2& p, const Field2& variation, Vec2 y) {
  if (!(layer.E > 0.0)) throw DomainError("layer Young's modulus must be positive");
  const double h = layer.h;
  return -h * h * h / layer.E * p.jet(y).laplacian() -
         3.0 * h * h / layer.E * div_weighted_grad_at(variation, p, y);
}

LimitCoefficients incompressible_limit_coefficients(double E, double nu) {
  if (!(E > 0.0)) throw DomainError("Young's modulus must be positive");
  if (!(nu > -1.0 && nu <= 0.5)) throw DomainError("Poisson's ratio must lie in (-1, 0.5]");
  const double q = E * (1.0 - nu) * (1.0 - nu);
  return {nu * (1.0 + nu) * (4.0 * nu - 1.0) / q, nu * (1.0 + nu) * (1.0 - 2.0 * nu) / q,
          2.0 * nu * nu * (1.0 + nu) / q};
}

LimitCoefficients limit_coefficients_lame(double lambda, double mu) {
  if (!(mu > 0.0)) throw DomainError("shear modulus must be positive");
  const double M = 2.0 * mu + lambda;
  return {lambda * (lambda - mu) / (mu * M * M), lambda / (M * M), lambda * lambda / (mu * M * M)};
}

double c0_incompressible(double E, double h_star, const Field2& variation_star, const Field2& pressure, Vec2 y) {
  if (!(E > 0.0)) throw DomainError("Young's modulus must be positive");
  return -3.0 * h_star * h_star / E * div_weighted_grad_at(variation_star, pressure, y);
}

}  // namespace thinlayer
