#pragma once

#include <cmath>

namespace thinlayer {

struct Vec2 {
  double y1 = 0.0;
  double y2 = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.y1 + b.y1, a.y2 + b.y2}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.y1 - b.y1, a.y2 - b.y2}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.y1, s * a.y2}; }
  friend double dot(Vec2 a, Vec2 b) { return a.y1 * b.y1 + a.y2 * b.y2; }
};

// Paraboloid gap phi(y) = y1^2/(2 R1) + y2^2/(2 R2) together with the
// approach delta0 of the two substrates.
struct ParaboloidGap {
  double R1 = 1.0;
  double R2 = 1.0;
  double delta0 = 0.0;

  // Interference delta0 - phi(y); positive inside the contact ellipse.
  double interference(Vec2 y) const;
};

double gap_eval(const ParaboloidGap& gap, Vec2 y);

// Elliptical patch y1^2/a1^2 + y2^2/a2^2 <= 1.
class EllipseDomain {
 public:
  EllipseDomain(double a1, double a2);

  double a1() const { return a1_; }
  double a2() const { return a2_; }
  double aspect() const { return a2_ / a1_; }
  double area() const;

  // 1 - y1^2/a1^2 - y2^2/a2^2; zero on the contour, one at the centre.
  double theta(Vec2 y) const;
  bool contains(Vec2 y) const { return theta(y) >= 0.0; }

  // Mapped (unit-disk) coordinates and back.
  Vec2 to_unit(Vec2 y) const { return {y.y1 / a1_, y.y2 / a2_}; }
  Vec2 from_unit(Vec2 xi) const { return {a1_ * xi.y1, a2_ * xi.y2}; }

  EllipseDomain scaled(double kappa) const;

 private:
  double a1_;
  double a2_;
};

}  // namespace thinlayer
