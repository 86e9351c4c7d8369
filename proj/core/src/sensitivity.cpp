#include "thinlayer/sensitivity.hpp"

#include <cmath>
#include <numbers>

#include "thinlayer/calculus.hpp"
#include "thinlayer/errors.hpp"

namespace thinlayer {

namespace {

double layer_factor(const LayerSpec& spec) {
  if (!(spec.E > 0.0)) throw DomainError("layer Young's modulus must be positive");
  return spec.h * spec.h / spec.E;
}

}  // namespace

ScalarField sensitivity_rhs(const SensitivityProblem& prob, const DiskGrid& grid, RhsForm form) {
  const EllipseDomain& omega = prob.base.domain;
  const Field2 p_bar = prob.base.pressure_field();
  ScalarField total = ScalarField::zeros(omega, grid);
  if (form == RhsForm::flux) {
    const ScalarField p = ScalarField::sample(omega, grid, p_bar);
    for (const LayerVariation& l : prob.layers) {
      const double c = -prob.m() * 3.0 * layer_factor(l.spec);
      const ScalarField w = ScalarField::sample(omega, grid, l.variation);
      total = total + c * div_weighted_grad(w, p);
    }
    return total;
  }
  for (const LayerVariation& l : prob.layers) {
    const double c = -prob.m() * 3.0 * layer_factor(l.spec);
    const Field2& w = l.variation;
    total = total + ScalarField::sample(omega, grid, [&](Vec2 y) { return c * div_weighted_grad_at(w, p_bar, y); });
  }
  return total;
}

PoissonResult pressure_variation(const SensitivityProblem& prob, const DiskGrid& grid, RhsForm form,
                                 const PoissonOptions& options) {
  return poisson_solve_dirichlet(prob.base.domain, sensitivity_rhs(prob, grid, form), options);
}

double force_variation(const ScalarField& p_tilde) { return integrate_ellipse(p_tilde); }

double absolute_force_variation(const ScalarField& p_tilde) {
  return integrate_ellipse(p_tilde.map([](double v) { return std::abs(v); }));
}

const char* weight_name(WeightKind kind) {
  switch (kind) {
    case WeightKind::rho: return "rho";
    case WeightKind::rho_star: return "rho_star";
    case WeightKind::theta_star: return "theta_star";
    case WeightKind::uniform: return "uniform";
  }
  return "unknown";
}

double weight_eval(const WeightFunction& w, Vec2 y) {
  const EllipseDomain& d = w.domain;
  const double th = d.theta(y);
  if (th < 0.0) return 0.0;
  switch (w.kind) {
    case WeightKind::rho:
    case WeightKind::rho_star: {
      const double s = d.aspect();
      const double q = s * y.y1 * y.y1 / (d.a1() * d.a1()) + y.y2 * y.y2 / (s * d.a2() * d.a2());
      return q * th;
    }
    case WeightKind::theta_star: return th;
    case WeightKind::uniform: return 1.0;
  }
  return 0.0;
}

double orthogonality_residual(std::span<const LayerVariation> layers, const EllipseDomain& omega,
                              const PolarRule& rule) {
  const WeightFunction rho{WeightKind::rho, omega};
  double total = 0.0;
  for (const LayerVariation& l : layers) {
    const double c = layer_factor(l.spec);
    const Field2& H = l.variation;
    total += c * integrate_ellipse(omega, [&](Vec2 y) { return H(y) * weight_eval(rho, y); }, rule);
  }
  return total;
}

double predicted_force_variation(const SensitivityProblem& prob, const PolarRule& rule) {
  const EllipseDomain& d = prob.base.domain;
  const double a1s = d.a1() * d.a1();
  const double a2s = d.a2() * d.a2();
  const double C = a1s * a2s / (2.0 * (a1s + a2s));
  return -24.0 * prob.m() * C * prob.base.p0 / (d.a1() * d.a2()) *
         orthogonality_residual(prob.layers, d, rule);
}

double boundary_flux_term(const SensitivityProblem& prob, int samples) {
  const EllipseDomain& d = prob.base.domain;
  const Polynomial2 p_bar = prob.base.pressure_polynomial();
  const double dt = 2.0 * std::numbers::pi / samples;
  double total = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = dt * k;
    const Vec2 y{d.a1() * std::cos(t), d.a2() * std::sin(t)};
    // Outward normal of the level set theta = 0 and the arclength factor.
    const Vec2 g{y.y1 / (d.a1() * d.a1()), y.y2 / (d.a2() * d.a2())};
    const double gn = std::sqrt(dot(g, g));
    const Vec2 n = (1.0 / gn) * g;
    const double ds = std::hypot(d.a1() * std::sin(t), d.a2() * std::cos(t));
    double weight = 0.0;
    for (const LayerVariation& l : prob.layers) weight += layer_factor(l.spec) * l.variation(y);
    total += d.theta(y) * dot(n, p_bar.jet(y).grad()) * weight * ds;
  }
  return total * dt;
}

double gap_variation_residual(const Field2& phi_tilde, const EllipseDomain& omega_star, const PolarRule& rule) {
  return integrate_ellipse(omega_star, [&](Vec2 y) { return phi_tilde(y) * omega_star.theta(y); }, rule);
}

PoissonResult gap_pressure_variation(double m, const Field2& phi_tilde, const EllipseDomain& omega,
                                     const DiskGrid& grid, const PoissonOptions& options) {
  if (!(m > 0.0)) throw DomainError("aggregate coefficient m must be positive");
  const ScalarField rhs = ScalarField::sample(omega, grid, [&](Vec2 y) { return m * phi_tilde(y); });
  return poisson_solve_dirichlet(omega, rhs, options);
}

}  // namespace thinlayer
