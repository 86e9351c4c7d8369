#pragma once

#include <cmath>

#include "thinlayer/types.hpp"

namespace thinlayer {

// Value, gradient and Hessian of a scalar field of (y1, y2) at one point.
// Arithmetic propagates all second derivatives exactly, so an expression
// evaluated on Jets yields its analytic Laplacian.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d11 = 0.0;
  double d22 = 0.0;
  double d12 = 0.0;

  static Jet constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet y1(Vec2 y) { return {y.y1, 1, 0, 0, 0, 0}; }
  static Jet y2(Vec2 y) { return {y.y2, 0, 1, 0, 0, 0}; }

  Vec2 grad() const { return {d1, d2}; }
  double laplacian() const { return d11 + d22; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d11 + b.d11, a.d22 + b.d22, a.d12 + b.d12};
}

inline Jet operator-(const Jet& a, const Jet& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d11 - b.d11, a.d22 - b.d22, a.d12 - b.d12};
}

inline Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2, -a.d11, -a.d22, -a.d12}; }

inline Jet operator*(double s, const Jet& a) {
  return {s * a.v, s * a.d1, s * a.d2, s * a.d11, s * a.d22, s * a.d12};
}

inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v,
          a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + a.v * b.d2,
          a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11,
          a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22,
          a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12};
}

// Chain rule for a scalar function g with g(a.v) = g0, g'(a.v) = g1,
// g''(a.v) = g2.
inline Jet compose(const Jet& a, double g0, double g1, double g2) {
  return {g0,
          g1 * a.d1,
          g1 * a.d2,
          g1 * a.d11 + g2 * a.d1 * a.d1,
          g1 * a.d22 + g2 * a.d2 * a.d2,
          g1 * a.d12 + g2 * a.d1 * a.d2};
}

inline Jet reciprocal(const Jet& a) {
  const double r = 1.0 / a.v;
  return compose(a, r, -r * r, 2.0 * r * r * r);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

inline Jet sin(const Jet& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return compose(a, s, c, -s);
}

inline Jet cos(const Jet& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return compose(a, c, -s, -c);
}

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}

inline Jet pow(const Jet& a, int n) {
  if (n == 0) return Jet::constant(1.0);
  const double x = a.v;
  const double g0 = std::pow(x, n);
  const double g1 = n * std::pow(x, n - 1);
  const double g2 = (n == 1) ? 0.0 : n * (n - 1) * std::pow(x, n - 2);
  return compose(a, g0, g1, g2);
}

}  // namespace thinlayer
