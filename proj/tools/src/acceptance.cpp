#include "thinlayer/cli/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "thinlayer/cli/io.hpp"
#include "thinlayer/displacement.hpp"
#include "thinlayer/effective_thickness.hpp"
#include "thinlayer/elastic.hpp"
#include "thinlayer/errors.hpp"
#include "thinlayer/expression.hpp"
#include "thinlayer/incompressible.hpp"
#include "thinlayer/perturbation.hpp"
#include "thinlayer/poisson.hpp"
#include "thinlayer/polynomial.hpp"
#include "thinlayer/quadrature.hpp"
#include "thinlayer/sensitivity.hpp"
#include "thinlayer/winkler.hpp"

namespace thinlayer::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Geometry and layers of the shipped sample: two equal bonded layers.
const ParaboloidGap kSampleGap{80.0, 40.0, 0.8};
const LayerSpec kSampleLayer{10.0, 2.0};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

EllipticContactSolution sample_contact() {
  const LayerSpec layers[] = {kSampleLayer, kSampleLayer};
  return elliptic_contact_solve(aggregate_compliance(layers), kSampleGap);
}

// Relative discrete L2 error of the Theta solve over interior nodes.
double theta_error(const EllipseDomain& d, int cells) {
  const DiskGrid grid(cells);
  const ScalarField one = ScalarField::sample(d, grid, [](Vec2) { return 1.0; });
  const ScalarField u = poisson_solve_dirichlet(d, one).solution;
  const double a1s = d.a1() * d.a1();
  const double a2s = d.a2() * d.a2();
  const double C = a1s * a2s / (2.0 * (a1s + a2s));
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j < grid.side(); ++j) {
    for (int i = 0; i < grid.side(); ++i) {
      if (!grid.strictly_inside(i, j)) continue;
      const double exact = -C * d.theta(u.point(i, j));
      num += (u.at(i, j) - exact) * (u.at(i, j) - exact);
      den += exact * exact;
    }
  }
  return std::sqrt(num / den);
}

Polynomial2 random_polynomial(std::mt19937& rng, int deg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Polynomial2 p;
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) p += Polynomial2::monomial(u(rng), i, j);
  }
  return p;
}

Polynomial2 f_star(double delta0, double R1, double R2) {
  return Polynomial2::constant(delta0) - Polynomial2::monomial(0.5 / R1, 2, 0) -
         Polynomial2::monomial(0.5 / R2, 0, 2);
}

const Vec2 kProbe[] = {{0.0, 0.0}, {0.3, -0.2}, {-0.7, 0.5}, {1.1, 0.9}, {-1.4, -0.6}};

CriterionResult winkler_circular() {
  CriterionResult r{1, "winkler circular force", false, {}, "relative error <= 1e-6"};
  const Material mat = Material::compressible(10.0, 0.3);
  const double R = 50.0;
  const double delta0 = 0.4;
  const double h = 2.0;
  const double force = winkler_force(mat, LayerThickness::uniform(h, 1.0), {R, R, delta0},
                                     PolarRule::for_resolution(256));
  const double exact = kPi * mat.p_modulus() * R * delta0 * delta0 / h;
  const double e = rel(force, exact);
  r.measured = {{"force", force}, {"exact", exact}, {"rel_err", e}};
  r.passed = e <= 1e-6;
  return r;
}

CriterionResult elliptic_circular() {
  CriterionResult r{2, "elliptic circular closed form", false, {},
                    "a^2 and p0 relative error <= 1e-10, |M_P - 2| / 2 <= 1e-8"};
  double worst_geom = 0.0;
  double worst_mp = 0.0;
  for (const auto& [m, R, delta0] : {std::tuple{0.625, 30.0, 0.5}, std::tuple{3.0, 2.0, 0.01}}) {
    const ParaboloidGap gap{R, R, delta0};
    const EllipticContactSolution sol = elliptic_contact_solve(m, gap);
    const double a2 = 4.0 * R * delta0;
    worst_geom = std::max({worst_geom, rel(sol.domain.a1() * sol.domain.a1(), a2),
                           rel(sol.domain.a2() * sol.domain.a2(), a2), rel(sol.p0, m * R * delta0 * delta0 / 2.0)});
    worst_mp = std::max(worst_mp, rel(contact_force_and_MP(sol, m, gap).M_P, 2.0));
  }
  r.measured = {{"geometry_rel_err", worst_geom}, {"M_P_rel_err", worst_mp}};
  r.passed = worst_geom <= 1e-10 && worst_mp <= 1e-8;
  return r;
}

CriterionResult elliptic_pde_residual() {
  CriterionResult r{3, "elliptic PDE residual", false, {}, "max |residual| <= 1e-10 on a 64^2 sample"};
  double worst = 0.0;
  const DiskGrid grid(64);
  for (const ParaboloidGap& gap : {kSampleGap, ParaboloidGap{5.0, 50.0, 0.3}}) {
    const EllipticContactSolution sol = elliptic_contact_solve(0.625, gap);
    for (int j = 0; j < grid.side(); ++j) {
      for (int i = 0; i < grid.side(); ++i) {
        if (grid.radius2(i, j) > 1.0) continue;
        const Vec2 y = sol.domain.from_unit({grid.coord(i), grid.coord(j)});
        worst = std::max(worst, std::abs(pde_residual(sol, y)));
      }
    }
  }
  r.measured = {{"max_residual", worst}};
  r.passed = worst <= 1e-10;
  return r;
}

CriterionResult theta_problem(int coarse) {
  CriterionResult r{4, "theta problem convergence", false, {},
                    "L2 error <= 1e-4 at 256^2; error ratio " + std::to_string(coarse) + "^2 / " +
                        std::to_string(2 * coarse) + "^2 in 4.0 +- 0.5"};
  const EllipseDomain d = sample_contact().domain;
  const double e256 = theta_error(d, 256);
  const double ec = coarse == 256 ? e256 : theta_error(d, coarse);
  const double ef = 2 * coarse == 256 ? e256 : theta_error(d, 2 * coarse);
  const double ratio = ec / ef;
  r.measured = {{"l2_err_256", e256}, {"l2_err_coarse", ec}, {"l2_err_fine", ef}, {"ratio", ratio}};
  r.passed = e256 <= 1e-4 && std::abs(ratio - 4.0) <= 0.5;
  return r;
}

CriterionResult quadrature_identities() {
  CriterionResult r{5, "elliptic quadrature identities", false, {}, "relative error <= 1e-6"};
  double worst_theta = 0.0;
  double worst_rho = 0.0;
  for (const EllipseDomain& d : {sample_contact().domain, EllipseDomain(1.0, 1.0), EllipseDomain(4.0, 0.25)}) {
    const double a1 = d.a1();
    const double a2 = d.a2();
    const double t2 = integrate_ellipse(d, [&](Vec2 y) { return d.theta(y) * d.theta(y); });
    worst_theta = std::max(worst_theta, rel(t2, kPi * a1 * a2 / 3.0));
    const WeightFunction w{WeightKind::rho_star, d};
    const double rho = integrate_ellipse(d, [&](Vec2 y) { return weight_eval(w, y); });
    worst_rho = std::max(worst_rho, rel(rho, kPi * (a1 * a1 + a2 * a2) / 12.0));
  }
  r.measured = {{"theta_squared_rel_err", worst_theta}, {"rho_star_rel_err", worst_rho}};
  r.passed = worst_theta <= 1e-6 && worst_rho <= 1e-6;
  return r;
}

double force_ratio(const EllipticContactSolution& base, const Field2& variation) {
  const SensitivityProblem prob{base, {{kSampleLayer, variation}, {kSampleLayer, variation}}};
  const ScalarField p = pressure_variation(prob, DiskGrid(256)).solution;
  return std::abs(force_variation(p)) / absolute_force_variation(p);
}

CriterionResult chain_property(const Field2& sample_map) {
  CriterionResult r{6, "chain property", false, {},
                    "orthogonalized |int p~| / int |p~| <= 1e-3; non-orthogonal ratio > 1e-1 (256^2)"};
  const EllipticContactSolution base = sample_contact();
  const double h_rho = effective_thickness(sample_map, base.domain, WeightKind::rho_star).h_eff;
  const double h_plain = effective_thickness(sample_map, base.domain, WeightKind::uniform).h_eff;
  const double orth = force_ratio(base, orthogonalized_variation(sample_map, h_rho));
  const double plain = force_ratio(base, orthogonalized_variation(sample_map, h_plain));
  r.measured = {{"ratio_orthogonal", orth}, {"ratio_plain_mean", plain}};
  r.passed = orth <= 1e-3 && plain > 1e-1;
  return r;
}

CriterionResult residual_order() {
  CriterionResult r{7, "perturbation residual order", false, {}, "log-log slope in 4.0 +- 0.3"};
  const Material mat = Material::compressible(1.0, 0.3);
  const Polynomial2 f = f_star(1.0, 2.0, 3.0);
  const Polynomial2 psi = Polynomial2::constant(0.4) + Polynomial2::monomial(0.5, 1, 0) +
                          Polynomial2::monomial(-0.3, 0, 1);
  // Contact ellipse of f: a_alpha = sqrt(2 R* delta0*).
  const EllipseDomain region(2.0, std::sqrt(6.0));
  const double eps[] = {0.2, 0.1, 0.05, 0.025};
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (double e : eps) {
    const PerturbationSeries s(mat, 1.0, e, Field2::polynomial(f), Field2::polynomial(psi));
    const double res = residual_check(s, region, DiskGrid(128));
    r.measured.emplace_back("residual_eps_" + format_number(e), res);
    const double x = std::log(e);
    const double y = std::log(res);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = 4.0;
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.measured.emplace_back("slope", slope);
  r.passed = std::abs(slope - 4.0) <= 0.3;
  return r;
}

CriterionResult geometric_series() {
  CriterionResult r{8, "geometric series for constant psi", false, {},
                    "|sigma_k psi-part - (-c)^k f*| <= 1e-14 max(1, |(-c)^k f*|)"};
  const Material mat = Material::compressible(1.0, 0.3);
  const Polynomial2 f = f_star(1.0, 2.0, 5.0);
  double worst = 0.0;
  for (double c : {-0.7, 0.25, 1.0, 3.0}) {
    const PerturbationSeries s(mat, 1.0, 0.1, Field2::polynomial(f), Field2::constant(c));
    for (Vec2 y : kProbe) {
      for (int k = 0; k <= 3; ++k) {
        const double expect = std::pow(-c, k) * f(y);
        worst = std::max(worst, std::abs(s.sigma(k, y).thickness_part - expect) / std::max(1.0, std::abs(expect)));
      }
    }
  }
  r.measured = {{"max_rel_err", worst}};
  r.passed = worst <= 1e-14;
  return r;
}

CriterionResult incompressible_limit() {
  CriterionResult r{9, "incompressible limit coefficient", false, {},
                    "nu = 0.4999 within 0.2% of 3/E; nu = 0.25 gives |A| <= 1e-12"};
  double worst_limit = 0.0;
  double worst_zero = 0.0;
  for (double E : {1.0, 7.5}) {
    worst_limit = std::max(worst_limit, rel(incompressible_limit_coefficients(E, 0.4999).A, 3.0 / E));
    worst_zero = std::max(worst_zero, std::abs(incompressible_limit_coefficients(E, 0.25).A));
  }
  r.measured = {{"limit_rel_err", worst_limit}, {"quarter_abs", worst_zero}};
  r.passed = worst_limit <= 2e-3 && worst_zero <= 1e-12;
  return r;
}

CriterionResult c0_dual_form() {
  CriterionResult r{10, "surface constant dual forms", false, {}, "|bracket - expanded| <= 1e-10 max(1, |C0|)"};
  std::mt19937 rng(20261016);
  double worst = 0.0;
  for (double nu : {0.1, 0.25, 0.3, 0.45, 0.49}) {
    const Material mat = Material::compressible(1.7, nu);
    for (int trial = 0; trial < 10; ++trial) {
      const DisplacementProfile prof(mat, 0.9, Field2::polynomial(random_polynomial(rng, 4)),
                                     Field2::polynomial(random_polynomial(rng, 4)));
      for (Vec2 y : kProbe) {
        const double a = prof.c0(y);
        worst = std::max(worst, std::abs(a - prof.c0_expanded(y)) / std::max(1.0, std::abs(a)));
      }
    }
  }
  r.measured = {{"max_rel_err", worst}};
  r.passed = worst <= 1e-10;
  return r;
}

CriterionResult effective_thickness_optimality(const Field2& sample_map) {
  CriterionResult r{11, "effective thickness optimality", false, {},
                    "criterion(h_eff) < criterion(h_eff (1 +- 0.001)); theta* map h_eff(rho*) rel err <= 1e-6"};
  const EllipseDomain omega = sample_contact().domain;
  const Field2 maps[] = {
      sample_map,
      parse_expression("2 + 0.3*sin(y1/5)*cos(y2/7)"),
      parse_expression("2 + 0.002*y1*y2 + 0.0004*y1^2 - 0.1*exp(-(y1^2 + y2^2)/40)"),
  };
  bool optimal = true;
  double min_margin = INFINITY;
  for (const Field2& H : maps) {
    for (WeightKind kind : {WeightKind::rho_star, WeightKind::theta_star, WeightKind::uniform}) {
      const double h = effective_thickness(H, omega, kind).h_eff;
      const double c = criterion_value(H, h, omega, kind);
      for (double f : {0.999, 1.001}) {
        const double cn = criterion_value(H, h * f, omega, kind);
        optimal = optimal && c < cn;
        min_margin = std::min(min_margin, (cn - c) / cn);
      }
    }
  }
  const double h0 = 1.5;
  const double beta = 0.2;
  const EllipseDomain disk(3.0, 3.0);
  const Field2 H = Field2::from_jet([disk, h0, beta](Vec2 y) {
    const Jet t = Jet::constant(1.0) - (1.0 / 9.0) * (Jet::y1(y) * Jet::y1(y) + Jet::y2(y) * Jet::y2(y));
    return h0 * (Jet::constant(1.0) + beta * t);
  });
  const double e = rel(effective_thickness(H, disk, WeightKind::rho_star).h_eff, h0 * (1.0 + beta / 2.0));
  r.measured = {{"min_relative_margin", min_margin}, {"theta_map_rel_err", e}};
  r.passed = optimal && e <= 1e-6;
  return r;
}

CriterionResult weight_geometry() {
  CriterionResult r{12, "weight maximum location", false, {},
                    "rho* radial argmax = 1/sqrt(2) +- 1e-6; theta* argmax = 0"};
  const EllipseDomain omega = sample_contact().domain;
  double worst_rho = 0.0;
  double worst_theta = 0.0;
  for (double angle : {0.0, kPi / 4.0, kPi / 2.0, 2.0}) {
    worst_rho = std::max(worst_rho, std::abs(radial_argmax({WeightKind::rho_star, omega}, angle) - std::sqrt(0.5)));
    worst_theta = std::max(worst_theta, std::abs(radial_argmax({WeightKind::theta_star, omega}, angle)));
  }
  r.measured = {{"rho_star_abs_err", worst_rho}, {"theta_star_argmax", worst_theta}};
  r.passed = worst_rho <= 1e-6 && worst_theta == 0.0;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  if (options.ratio_cells < 32 || options.ratio_cells > 1024 ||
      (options.ratio_cells & (options.ratio_cells - 1)) != 0) {
    throw DomainError("convergence grid must be a power of two in [32, 1024]");
  }
  const Field2 sample_map = read_lattice_csv(options.sample_map, "H").to_field();
  std::vector<CriterionResult> out;
  out.push_back(winkler_circular());
  out.push_back(elliptic_circular());
  out.push_back(elliptic_pde_residual());
  out.push_back(theta_problem(options.ratio_cells));
  out.push_back(quadrature_identities());
  out.push_back(chain_property(sample_map));
  out.push_back(residual_order());
  out.push_back(geometric_series());
  out.push_back(incompressible_limit());
  out.push_back(c0_dual_form());
  out.push_back(effective_thickness_optimality(sample_map));
  out.push_back(weight_geometry());
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << " ";
  for (const auto& [key, value] : r.measured) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    os << " " << key << "=" << buf;
  }
  os << "  [" << r.target << "]";
  return os.str();
}

}  // namespace thinlayer::cli
