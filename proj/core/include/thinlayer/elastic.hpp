#pragma once

namespace thinlayer {

struct LamePair {
  double lambda;
  double mu;
};

// lambda = E nu / ((1+nu)(1-2nu)), mu = E / (2(1+nu)).
// Throws IncompressibleSingularity at nu = 0.5 and DomainError for E <= 0
// or nu outside (-1, 0.5).
LamePair lame_from_engineering(double E, double nu);

struct EngineeringPair {
  double E;
  double nu;
};

EngineeringPair engineering_from_lame(double lambda, double mu);

// Isotropic layer material. The compressible representation carries a
// finite Lame pair; the incompressible one (nu = 0.5) has no lambda and
// every formula that needs it raises IncompressibleSingularity.
class Material {
 public:
  static Material compressible(double E, double nu);
  static Material incompressible(double E);
  static Material from_lame(double lambda, double mu);

  double E() const { return E_; }
  double nu() const { return nu_; }
  double mu() const { return mu_; }
  bool is_incompressible() const { return incompressible_; }

  double lambda() const;
  // P-wave (constrained) modulus 2 mu + lambda.
  double p_modulus() const;

 private:
  Material(double E, double nu, double lambda, double mu, bool incompressible)
      : E_(E), nu_(nu), lambda_(lambda), mu_(mu), incompressible_(incompressible) {}

  double E_;
  double nu_;
  double lambda_;
  double mu_;
  bool incompressible_;
};

}  // namespace thinlayer
