#pragma once

#include <functional>
#include <memory>
#include <variant>

#include "thinlayer/jet.hpp"
#include "thinlayer/polynomial.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// A smooth scalar field on the plane with pointwise access to value,
// gradient and Hessian. Three backings:
//  - Polynomial2: exact symbolic derivatives;
//  - a Jet function (closed-form expressions): exact derivatives by
//    forward propagation;
//  - a plain callable: central differences with a fixed step.
// Copies share the backing, so fields are cheap to pass by value.
class Field2 {
 public:
  using JetFn = std::function<Jet(Vec2)>;
  using ValueFn = std::function<double(Vec2)>;

  Field2() : Field2(constant(0.0)) {}

  static Field2 constant(double c);
  static Field2 polynomial(Polynomial2 p);
  static Field2 from_jet(JetFn fn);
  static Field2 from_values(ValueFn fn, double fd_step);

  double operator()(Vec2 y) const;
  Jet jet(Vec2 y) const;

  // Non-null when the field is an exact polynomial.
  const Polynomial2* as_polynomial() const;

  // a * f + b, staying polynomial when possible.
  Field2 affine(double a, double b) const;

  friend Field2 operator+(const Field2& f, const Field2& g);
  friend Field2 operator-(const Field2& f, const Field2& g);
  friend Field2 operator*(const Field2& f, const Field2& g);

 private:
  struct FdBacked {
    ValueFn fn;
    double step;
  };
  using Backing = std::variant<Polynomial2, JetFn, FdBacked>;

  explicit Field2(std::shared_ptr<const Backing> b) : backing_(std::move(b)) {}

  std::shared_ptr<const Backing> backing_;
};

// Second-order central-difference jet of a plain callable.
Jet finite_difference_jet(const Field2::ValueFn& fn, Vec2 y, double step);

// Laplacian of the product f*g at y. Symbolic product when both fields are
// polynomial, product rule on jets otherwise.
double laplacian_of_product(const Field2& f, const Field2& g, Vec2 y);

// div(w grad f) at y. Symbolic when both are polynomial, otherwise
// grad w . grad f + w lap f from jets.
double div_weighted_grad_at(const Field2& w, const Field2& f, Vec2 y);

}  // namespace thinlayer
