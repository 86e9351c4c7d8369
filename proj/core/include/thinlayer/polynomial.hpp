#pragma once

#include <vector>

#include "thinlayer/jet.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// Dense bivariate polynomial sum c_ij y1^i y2^j. Products and derivatives
// are computed on coefficients, which makes it the symbolic reference for
// the differential identities used throughout the library.
class Polynomial2 {
 public:
  Polynomial2() = default;

  static Polynomial2 constant(double c);
  static Polynomial2 monomial(double c, int i, int j);
  static Polynomial2 y1() { return monomial(1.0, 1, 0); }
  static Polynomial2 y2() { return monomial(1.0, 0, 1); }

  // Highest power appearing in either variable (tensor degree).
  int degree() const { return size_ - 1; }
  double coeff(int i, int j) const;

  double operator()(Vec2 y) const;
  Jet jet(Vec2 y) const;

  Polynomial2 derivative(int axis) const;
  Polynomial2 laplacian() const;

  Polynomial2& operator+=(const Polynomial2& o);
  Polynomial2& operator-=(const Polynomial2& o);
  Polynomial2& operator*=(double s);

  friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
  friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
  friend Polynomial2 operator*(double s, Polynomial2 a) { return a *= s; }
  friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b);

 private:
  void resize(int size);
  double& at(int i, int j) { return c_[static_cast<std::size_t>(i * size_ + j)]; }
  double at(int i, int j) const { return c_[static_cast<std::size_t>(i * size_ + j)]; }

  int size_ = 0;
  std::vector<double> c_;
};

Polynomial2 pow(const Polynomial2& p, int n);

// theta(y) = 1 - y1^2/a1^2 - y2^2/a2^2.
Polynomial2 theta_polynomial(double a1, double a2);

// Symbolic div(w grad f) = d1(w d1 f) + d2(w d2 f).
Polynomial2 div_weighted_grad(const Polynomial2& w, const Polynomial2& f);

}  // namespace thinlayer
