#include "thinlayer/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include "thinlayer/calculus.hpp"
#include "thinlayer/errors.hpp"

namespace thinlayer {

PerturbationSeries::PerturbationSeries(const Material& material, double h_star, double eps, Field2 f_star,
                                       Field2 psi_star)
    : material_(material), h_star_(h_star), eps_(eps), f_star_(std::move(f_star)), psi_star_(std::move(psi_star)) {
  if (material_.is_incompressible()) {
    throw IncompressibleSingularity("the perturbation series applies to compressible layers only");
  }
  if (!(material_.mu() > 0.0)) throw DomainError("shear modulus must be positive");
  if (!(h_star > 0.0)) throw DomainError("h* must be positive");
  if (!(eps >= 0.0)) throw DomainError("eps must be non-negative");
}

double PerturbationSeries::prefactor() const { return material_.p_modulus() / h_star_; }

double PerturbationSeries::bending_coefficient() const {
  const double l = material_.lambda();
  const double m = material_.mu();
  return h_star_ * h_star_ * l * (l - m) / (3.0 * m * (2.0 * m + l));
}

double PerturbationSeries::curvature_coefficient() const {
  const double l = material_.lambda();
  const double m = material_.mu();
  return h_star_ * h_star_ * l * (2.0 * l + m) / (6.0 * m * (2.0 * m + l));
}

double PerturbationSeries::coupling_coefficient() const {
  const double l = material_.lambda();
  const double m = material_.mu();
  return h_star_ * h_star_ * l / (2.0 * m * (2.0 * m + l));
}

SeriesTerm PerturbationSeries::sigma(int k, Vec2 y) const {
  const Jet f = f_star_.jet(y);
  const Jet psi = psi_star_.jet(y);
  switch (k) {
    case 0: return {f.v, 0.0};
    case 1: return {-psi.v * f.v, 0.0};
    case 2: return {psi.v * psi.v * f.v, bending_coefficient() * f.laplacian()};
    case 3:
      return {-psi.v * psi.v * psi.v * f.v,
              bending_coefficient() * (dot(f.grad(), psi.grad()) + psi.v * f.laplacian()) -
                  curvature_coefficient() * f.v * psi.laplacian()};
    default: throw DomainError("series coefficients exist for k = 0..3");
  }
}

double PerturbationSeries::sigma3_expanded(Vec2 y) const {
  const double psi = psi_star_(y);
  const double f = f_star_(y);
  const double lap_f = f_star_.jet(y).laplacian();
  const double lap_psi_f = laplacian_of_product(psi_star_, f_star_, y);
  const double div_psi_grad_f = div_weighted_grad_at(psi_star_, f_star_, y);
  const double l = material_.lambda();
  const double m = material_.mu();
  return -psi * psi * psi * f - bending_coefficient() * (psi * lap_f + lap_psi_f) -
         coupling_coefficient() * (m * (psi * lap_f + lap_psi_f) - 2.0 * l * div_psi_grad_f);
}

PerturbationSeries PerturbationSeries::with_eps(double eps) const {
  return {material_, h_star_, eps, f_star_, psi_star_};
}

PerturbationSeries perturbation_coefficients(const Material& material, const LayerThickness& layer,
                                             const ParaboloidGap& gap) {
  const double eps = layer.eps();
  // f* = delta0* - phi* with delta0* = delta0/eps, R* = eps R.
  const Polynomial2 f_star = Polynomial2::constant(gap.delta0 / eps) -
                             Polynomial2::monomial(1.0 / (2.0 * eps * gap.R1), 2, 0) -
                             Polynomial2::monomial(1.0 / (2.0 * eps * gap.R2), 0, 2);
  return {material, layer.h_star(), eps, Field2::polynomial(f_star), layer.psi_star()};
}

double perturbation_pressure(const PerturbationSeries& series, Vec2 y) {
  const double e = series.eps();
  double acc = series.sigma(3, y).total();
  for (int k = 2; k >= 0; --k) acc = series.sigma(k, y).total() + e * acc;
  return series.prefactor() * acc;
}

double residual_check(const PerturbationSeries& series, const EllipseDomain& region, const DiskGrid& grid) {
  const ScalarField p =
      ScalarField::sample(region, grid, [&](Vec2 y) { return perturbation_pressure(series, y); });
  const ScalarField psi = ScalarField::sample(region, grid, series.psi_star());
  const ScalarField f = ScalarField::sample(region, grid, series.f_star());

  const ScalarField lap_p = field_laplacian(p);
  const ScalarField lap_p_psi = field_laplacian(p * psi);
  const ScalarField div_psi_grad_p = div_weighted_grad(psi, p);

  const double e = series.eps();
  const double K = series.bending_coefficient();
  const double L = series.coupling_coefficient();
  const double mu = series.material().mu();
  const double lambda = series.material().lambda();
  const double rhs_factor = series.prefactor();
  const double inset2 = 0.9 * 0.9;

  double worst = 0.0;
  for (int j = 0; j < grid.side(); ++j) {
    for (int i = 0; i < grid.side(); ++i) {
      if (grid.radius2(i, j) > inset2) continue;
      const double pv = p.at(i, j);
      const double sv = psi.at(i, j);
      const double lhs = pv + e * sv * pv - e * e * K * lap_p.at(i, j) +
                         e * e * e * L *
                             (mu * (sv * lap_p.at(i, j) + lap_p_psi.at(i, j)) -
                              2.0 * lambda * div_psi_grad_p.at(i, j));
      worst = std::max(worst, std::abs(lhs - rhs_factor * f.at(i, j)));
    }
  }
  return worst;
}

}  // namespace thinlayer
