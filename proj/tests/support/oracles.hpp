#pragma once

// Closed forms used as independent references by the tests.

#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// Polar substitution y = (a1 r cos t, a2 r sin t), dy = a1 a2 r dr dt.
inline double theta_squared_integral(double a1, double a2) { return pi * a1 * a2 / 3.0; }
inline double theta_integral(double a1, double a2) { return pi * a1 * a2 / 2.0; }
inline double rho_star_integral(double a1, double a2) { return pi * (a1 * a1 + a2 * a2) / 12.0; }
inline double theta_rho_integral(double a1, double a2) {
  const double s = a2 / a1;
  return pi * a1 * a2 * (s + 1.0 / s) / 24.0;
}

// Aspect ratio s = a2/a1 from R2/R1 = t through the quadratic in x = s^2:
//   3 x^2 + (1 - t) x - 3 t = 0.
inline double aspect_ratio(double t) {
  const double b = 1.0 - t;
  const double x = (-b + std::sqrt(b * b + 36.0 * t)) / 6.0;
  return std::sqrt(x);
}

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace oracle
