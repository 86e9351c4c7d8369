#include "thinlayer/winkler.hpp"

#include <vector>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thinlayer/errors.hpp"

namespace thinlayer {

double winkler_modulus(const Material& material, const LayerThickness& layer, Vec2 y) {
  const double M = material.p_modulus();
  const double H = layer.thickness(y);
  if (!(H > 0.0)) {
    std::ostringstream os;
    os << "layer thickness must be positive, H(" << y.y1 << ", " << y.y2 << ") = " << H;
    throw DomainError(os.str());
  }
  return M / H;
}

double winkler_pressure(const Material& material, const LayerThickness& layer, const ParaboloidGap& gap,
                        Vec2 y) {
  const double k = winkler_modulus(material, layer, y);
  return k * std::max(gap.interference(y), 0.0);
}

EllipseDomain winkler_contact_region(const ParaboloidGap& gap) {
  if (!(gap.delta0 > 0.0)) {
    std::ostringstream os;
    os << "no contact: approach delta0 = " << gap.delta0 << " must be positive";
    throw NoContact(os.str());
  }
  if (!(gap.R1 > 0.0) || !(gap.R2 > 0.0)) throw DomainError("curvature radii must be positive");
  return {std::sqrt(2.0 * gap.R1 * gap.delta0), std::sqrt(2.0 * gap.R2 * gap.delta0)};
}

double winkler_force(const Material& material, const LayerThickness& layer, const ParaboloidGap& gap,
                     const PolarRule& rule) {
  const EllipseDomain region = winkler_contact_region(gap);
  return integrate_ellipse(
      region, [&](Vec2 y) { return winkler_pressure(material, layer, gap, y); }, rule);
}

WinklerSolution winkler_solve(const Material& material, const LayerThickness& layer, const ParaboloidGap& gap,
                              const DiskGrid& grid) {
  const EllipseDomain region = winkler_contact_region(gap);
  // Decide contact on the normalized radius so rounding in the physical
  // interference cannot leave residue outside the ellipse.
  std::vector<double> values(grid.size(), 0.0);
  for (int j = 0; j < grid.side(); ++j) {
    for (int i = 0; i < grid.side(); ++i) {
      const double r2 = grid.radius2(i, j);
      if (r2 >= 1.0) continue;
      const Vec2 y{region.a1() * grid.coord(i), region.a2() * grid.coord(j)};
      values[grid.index(i, j)] = winkler_modulus(material, layer, y) * gap.delta0 * (1.0 - r2);
    }
  }
  ScalarField pressure(region, grid, std::move(values));
  ScalarField modulus =
      ScalarField::sample(region, grid, [&](Vec2 y) { return winkler_modulus(material, layer, y); });
  const double force = winkler_force(material, layer, gap, PolarRule::for_resolution(grid.cells()));
  double peak = 0.0;
  for (double v : pressure.values()) peak = std::max(peak, v);
  return {region, std::move(pressure), std::move(modulus), force, peak};
}

}  // namespace thinlayer
