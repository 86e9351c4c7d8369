#include "thinlayer/field.hpp"

#include <utility>

namespace thinlayer {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Jet finite_difference_jet(const Field2::ValueFn& fn, Vec2 y, double step) {
  const double s = step;
  const double f0 = fn(y);
  const double fe = fn({y.y1 + s, y.y2});
  const double fw = fn({y.y1 - s, y.y2});
  const double fn_ = fn({y.y1, y.y2 + s});
  const double fs = fn({y.y1, y.y2 - s});
  const double fne = fn({y.y1 + s, y.y2 + s});
  const double fnw = fn({y.y1 - s, y.y2 + s});
  const double fse = fn({y.y1 + s, y.y2 - s});
  const double fsw = fn({y.y1 - s, y.y2 - s});
  return {f0,
          (fe - fw) / (2.0 * s),
          (fn_ - fs) / (2.0 * s),
          (fe - 2.0 * f0 + fw) / (s * s),
          (fn_ - 2.0 * f0 + fs) / (s * s),
          (fne - fnw - fse + fsw) / (4.0 * s * s)};
}

Field2 Field2::constant(double c) { return polynomial(Polynomial2::constant(c)); }

Field2 Field2::polynomial(Polynomial2 p) {
  return Field2(std::make_shared<const Backing>(std::in_place_type<Polynomial2>, std::move(p)));
}

Field2 Field2::from_jet(JetFn fn) {
  return Field2(std::make_shared<const Backing>(std::in_place_type<JetFn>, std::move(fn)));
}

Field2 Field2::from_values(ValueFn fn, double fd_step) {
  return Field2(
      std::make_shared<const Backing>(std::in_place_type<FdBacked>, FdBacked{std::move(fn), fd_step}));
}

double Field2::operator()(Vec2 y) const {
  return std::visit(Overloaded{[&](const Polynomial2& p) { return p(y); },
                               [&](const JetFn& f) { return f(y).v; },
                               [&](const FdBacked& f) { return f.fn(y); }},
                    *backing_);
}

Jet Field2::jet(Vec2 y) const {
  return std::visit(Overloaded{[&](const Polynomial2& p) { return p.jet(y); },
                               [&](const JetFn& f) { return f(y); },
                               [&](const FdBacked& f) { return finite_difference_jet(f.fn, y, f.step); }},
                    *backing_);
}

const Polynomial2* Field2::as_polynomial() const { return std::get_if<Polynomial2>(backing_.get()); }

Field2 Field2::affine(double a, double b) const {
  if (const Polynomial2* p = as_polynomial()) {
    return polynomial(a * (*p) + Polynomial2::constant(b));
  }
  Field2 self = *this;
  return from_jet([self, a, b](Vec2 y) { return a * self.jet(y) + Jet::constant(b); });
}

Field2 operator+(const Field2& f, const Field2& g) {
  if (f.as_polynomial() && g.as_polynomial()) {
    return Field2::polynomial(*f.as_polynomial() + *g.as_polynomial());
  }
  return Field2::from_jet([f, g](Vec2 y) { return f.jet(y) + g.jet(y); });
}

Field2 operator-(const Field2& f, const Field2& g) {
  if (f.as_polynomial() && g.as_polynomial()) {
    return Field2::polynomial(*f.as_polynomial() - *g.as_polynomial());
  }
  return Field2::from_jet([f, g](Vec2 y) { return f.jet(y) - g.jet(y); });
}

Field2 operator*(const Field2& f, const Field2& g) {
  if (f.as_polynomial() && g.as_polynomial()) {
    return Field2::polynomial(*f.as_polynomial() * *g.as_polynomial());
  }
  return Field2::from_jet([f, g](Vec2 y) { return f.jet(y) * g.jet(y); });
}

double laplacian_of_product(const Field2& f, const Field2& g, Vec2 y) {
  if (f.as_polynomial() && g.as_polynomial()) {
    return ((*f.as_polynomial()) * (*g.as_polynomial())).laplacian()(y);
  }
  return (f.jet(y) * g.jet(y)).laplacian();
}

double div_weighted_grad_at(const Field2& w, const Field2& f, Vec2 y) {
  if (w.as_polynomial() && f.as_polynomial()) {
    return div_weighted_grad(*w.as_polynomial(), *f.as_polynomial())(y);
  }
  const Jet wj = w.jet(y);
  const Jet fj = f.jet(y);
  return dot(wj.grad(), fj.grad()) + wj.v * fj.laplacian();
}

}  // namespace thinlayer
