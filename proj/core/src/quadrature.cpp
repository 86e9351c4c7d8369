#include "thinlayer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thinlayer/errors.hpp"

namespace thinlayer {

GaussRule gauss_legendre_unit(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const unsigned un = static_cast<unsigned>(n);
  for (int k = 0; k < n; ++k) {
    // Newton on P_n from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double p = std::legendre(un, x);
      const double pm = n > 1 ? std::legendre(un - 1, x) : 1.0;
      dp = n * (x * p - pm) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double p = std::legendre(un, x);
    const double pm = n > 1 ? std::legendre(un - 1, x) : 1.0;
    dp = n * (x * p - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(k)] = 0.5 * (x + 1.0);
    rule.weights[static_cast<std::size_t>(k)] = 0.5 * w;
  }
  return rule;
}

PolarRule PolarRule::for_resolution(int cells) {
  return {std::max(8, cells / 4), std::max(32, cells)};
}

double integrate_ellipse(const EllipseDomain& domain, const std::function<double(Vec2)>& f,
                         const PolarRule& rule) {
  const GaussRule radial = gauss_legendre_unit(rule.radial);
  const double dt = 2.0 * std::numbers::pi / rule.angular;
  double total = 0.0;
  for (int l = 0; l < rule.angular; ++l) {
    const double t = dt * l;
    const double c = std::cos(t);
    const double s = std::sin(t);
    double ring = 0.0;
    for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
      const double r = radial.nodes[k];
      ring += radial.weights[k] * r * f({domain.a1() * r * c, domain.a2() * r * s});
    }
    total += ring;
  }
  return total * dt * domain.a1() * domain.a2();
}

double integrate_ellipse(const ScalarField& f) {
  if (f.support() == Support::extended) {
    return integrate_ellipse(f.domain(), [&f](Vec2 y) { return f.interpolate(y); },
                             PolarRule::for_resolution(f.grid().cells()));
  }
  const DiskGrid& g = f.grid();
  double total = 0.0;
  for (int j = 0; j < g.side(); ++j) {
    double row = 0.0;
    for (int i = 0; i < g.side(); ++i) {
      if (g.strictly_inside(i, j)) row += f.at(i, j);
    }
    total += row;
  }
  const double h = g.spacing();
  return total * h * h * f.domain().a1() * f.domain().a2();
}

}  // namespace thinlayer
