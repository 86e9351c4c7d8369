#include "thinlayer/polynomial.hpp"

#include <algorithm>

namespace thinlayer {

void Polynomial2::resize(int size) {
  if (size <= size_) return;
  std::vector<double> c(static_cast<std::size_t>(size * size), 0.0);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) c[static_cast<std::size_t>(i * size + j)] = at(i, j);
  }
  c_ = std::move(c);
  size_ = size;
}

Polynomial2 Polynomial2::constant(double c) { return monomial(c, 0, 0); }

Polynomial2 Polynomial2::monomial(double c, int i, int j) {
  Polynomial2 p;
  p.resize(std::max(i, j) + 1);
  p.at(i, j) = c;
  return p;
}

double Polynomial2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) return 0.0;
  return at(i, j);
}

double Polynomial2::operator()(Vec2 y) const {
  // Horner in y1 of Horner-in-y2 coefficients.
  double acc = 0.0;
  for (int i = size_ - 1; i >= 0; --i) {
    double row = 0.0;
    for (int j = size_ - 1; j >= 0; --j) row = row * y.y2 + at(i, j);
    acc = acc * y.y1 + row;
  }
  return acc;
}

Jet Polynomial2::jet(Vec2 y) const {
  return {(*this)(y),
          derivative(0)(y),
          derivative(1)(y),
          derivative(0).derivative(0)(y),
          derivative(1).derivative(1)(y),
          derivative(0).derivative(1)(y)};
}

Polynomial2 Polynomial2::derivative(int axis) const {
  Polynomial2 d;
  if (size_ <= 1) return constant(0.0);
  d.resize(size_);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      if (axis == 0 && i > 0) d.at(i - 1, j) = i * at(i, j);
      if (axis == 1 && j > 0) d.at(i, j - 1) = j * at(i, j);
    }
  }
  return d;
}

Polynomial2 Polynomial2::laplacian() const {
  return derivative(0).derivative(0) + derivative(1).derivative(1);
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o) {
  resize(o.size_);
  for (int i = 0; i < o.size_; ++i) {
    for (int j = 0; j < o.size_; ++j) at(i, j) += o.at(i, j);
  }
  return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& o) {
  resize(o.size_);
  for (int i = 0; i < o.size_; ++i) {
    for (int j = 0; j < o.size_; ++j) at(i, j) -= o.at(i, j);
  }
  return *this;
}

Polynomial2& Polynomial2::operator*=(double s) {
  for (double& c : c_) c *= s;
  return *this;
}

Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b) {
  Polynomial2 r;
  if (a.size_ == 0 || b.size_ == 0) return r;
  r.resize(a.size_ + b.size_ - 1);
  for (int i = 0; i < a.size_; ++i) {
    for (int j = 0; j < a.size_; ++j) {
      const double ca = a.at(i, j);
      if (ca == 0.0) continue;
      for (int k = 0; k < b.size_; ++k) {
        for (int l = 0; l < b.size_; ++l) r.at(i + k, j + l) += ca * b.at(k, l);
      }
    }
  }
  return r;
}

Polynomial2 pow(const Polynomial2& p, int n) {
  Polynomial2 r = Polynomial2::constant(1.0);
  for (int k = 0; k < n; ++k) r = r * p;
  return r;
}

Polynomial2 theta_polynomial(double a1, double a2) {
  return Polynomial2::constant(1.0) - Polynomial2::monomial(1.0 / (a1 * a1), 2, 0) -
         Polynomial2::monomial(1.0 / (a2 * a2), 0, 2);
}

Polynomial2 div_weighted_grad(const Polynomial2& w, const Polynomial2& f) {
  return (w * f.derivative(0)).derivative(0) + (w * f.derivative(1)).derivative(1);
}

}  // namespace thinlayer
