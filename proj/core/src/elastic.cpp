#include "thinlayer/elastic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "thinlayer/errors.hpp"

namespace thinlayer {

namespace {

void check_modulus(double E) {
  if (!(E > 0.0) || !std::isfinite(E)) {
    std::ostringstream os;
    os << "Young's modulus must be positive, got E = " << E;
    throw DomainError(os.str());
  }
}

}  // namespace

LamePair lame_from_engineering(double E, double nu) {
  check_modulus(E);
  if (nu == 0.5) {
    throw IncompressibleSingularity("lambda is undefined at nu = 0.5 (1 - 2 nu = 0)");
  }
  if (!(nu > -1.0 && nu < 0.5)) {
    std::ostringstream os;
    os << "Poisson's ratio must lie in (-1, 0.5), got nu = " << nu;
    throw DomainError(os.str());
  }
  return {E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu)), E / (2.0 * (1.0 + nu))};
}

EngineeringPair engineering_from_lame(double lambda, double mu) {
  if (!(mu > 0.0)) throw DomainError("shear modulus must be positive");
  if (!(lambda + mu > 0.0)) throw DomainError("lambda + mu must be positive");
  return {mu * (3.0 * lambda + 2.0 * mu) / (lambda + mu), lambda / (2.0 * (lambda + mu))};
}

Material Material::compressible(double E, double nu) {
  const LamePair lm = lame_from_engineering(E, nu);
  return Material(E, nu, lm.lambda, lm.mu, false);
}

Material Material::incompressible(double E) {
  check_modulus(E);
  return Material(E, 0.5, std::numeric_limits<double>::infinity(), E / 3.0, true);
}

Material Material::from_lame(double lambda, double mu) {
  const EngineeringPair en = engineering_from_lame(lambda, mu);
  return Material(en.E, en.nu, lambda, mu, false);
}

double Material::lambda() const {
  if (incompressible_) throw IncompressibleSingularity("lambda is unbounded for an incompressible layer");
  return lambda_;
}

double Material::p_modulus() const {
  if (incompressible_) {
    throw IncompressibleSingularity("2 mu + lambda is unbounded for an incompressible layer");
  }
  return 2.0 * mu_ + lambda_;
}

}  // namespace thinlayer
