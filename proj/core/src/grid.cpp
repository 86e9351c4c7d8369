#include "thinlayer/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thinlayer/errors.hpp"

namespace thinlayer {

namespace {

struct Stencil {
  int first;
  double w[4];
};

// Four-point Lagrange stencil at fractional index u on nodes 0..n-1.
Stencil lagrange_stencil(double u, int n) {
  int k = static_cast<int>(std::floor(u));
  k = std::clamp(k, 1, n - 3);
  const double t = u - k;
  return {k - 1,
          {-t * (t - 1.0) * (t - 2.0) / 6.0, (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0,
           -(t + 1.0) * t * (t - 2.0) / 2.0, (t + 1.0) * t * (t - 1.0) / 6.0}};
}

// First and second derivative of a strided line with second-order stencils
// (one-sided at both ends).
void differentiate_line(const double* in, std::size_t stride, int n, double h, double* d1,
                        double* d2, std::size_t out_stride) {
  auto v = [&](int k) { return in[static_cast<std::size_t>(k) * stride]; };
  for (int k = 0; k < n; ++k) {
    double first;
    double second;
    if (k == 0) {
      first = (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h);
      second = (2.0 * v(0) - 5.0 * v(1) + 4.0 * v(2) - v(3)) / (h * h);
    } else if (k == n - 1) {
      first = (3.0 * v(k) - 4.0 * v(k - 1) + v(k - 2)) / (2.0 * h);
      second = (2.0 * v(k) - 5.0 * v(k - 1) + 4.0 * v(k - 2) - v(k - 3)) / (h * h);
    } else {
      first = (v(k + 1) - v(k - 1)) / (2.0 * h);
      second = (v(k + 1) - 2.0 * v(k) + v(k - 1)) / (h * h);
    }
    if (d1) d1[static_cast<std::size_t>(k) * out_stride] = first;
    if (d2) d2[static_cast<std::size_t>(k) * out_stride] = second;
  }
}

}  // namespace

DiskGrid::DiskGrid(int cells) : cells_(cells) {
  if (cells < kMinCells) {
    std::ostringstream os;
    os << "grid needs at least " << kMinCells << " cells per side, got " << cells;
    throw DomainError(os.str());
  }
}

ScalarField::ScalarField(EllipseDomain domain, DiskGrid grid, std::vector<double> values, Support support)
    : domain_(domain), grid_(grid), values_(std::move(values)), support_(support) {
  if (values_.size() != grid_.size()) {
    std::ostringstream os;
    os << "field has " << values_.size() << " samples, lattice expects " << grid_.size();
    throw ShapeError(os.str());
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("field samples must be finite");
  }
}

ScalarField ScalarField::sample(const EllipseDomain& domain, const DiskGrid& grid,
                                const std::function<double(Vec2)>& fn) {
  std::vector<double> v(grid.size());
  for (int j = 0; j < grid.side(); ++j) {
    for (int i = 0; i < grid.side(); ++i) {
      v[grid.index(i, j)] = fn(domain.from_unit({grid.coord(i), grid.coord(j)}));
    }
  }
  return ScalarField(domain, grid, std::move(v), Support::extended);
}

ScalarField ScalarField::sample(const EllipseDomain& domain, const DiskGrid& grid, const Field2& f) {
  return sample(domain, grid, [&f](Vec2 y) { return f(y); });
}

ScalarField ScalarField::zeros(const EllipseDomain& domain, const DiskGrid& grid, Support support) {
  return ScalarField(domain, grid, std::vector<double>(grid.size(), 0.0), support);
}

Vec2 ScalarField::point(int i, int j) const {
  return domain_.from_unit({grid_.coord(i), grid_.coord(j)});
}

double ScalarField::interpolate(Vec2 y) const {
  const Vec2 xi = domain_.to_unit(y);
  const double h = grid_.spacing();
  const double u1 = (xi.y1 + 1.0) / h;
  const double u2 = (xi.y2 + 1.0) / h;
  const double tol = 1e-9;
  if (u1 < -tol || u2 < -tol || u1 > grid_.cells() + tol || u2 > grid_.cells() + tol) {
    throw DomainError("interpolation point outside the field lattice");
  }
  const Stencil s1 = lagrange_stencil(u1, grid_.side());
  const Stencil s2 = lagrange_stencil(u2, grid_.side());
  double acc = 0.0;
  for (int b = 0; b < 4; ++b) {
    double row = 0.0;
    for (int a = 0; a < 4; ++a) row += s1.w[a] * at(s1.first + a, s2.first + b);
    acc += s2.w[b] * row;
  }
  return acc;
}

Field2 ScalarField::to_field() const {
  return LatticeMap(lattice_of(domain_, grid_), values_).to_field();
}

ScalarField ScalarField::map(const std::function<double(double)>& fn) const {
  std::vector<double> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), fn);
  return ScalarField(domain_, grid_, std::move(v), support_);
}

void require_same_lattice(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid()) || a.domain().a1() != b.domain().a1() ||
      a.domain().a2() != b.domain().a2()) {
    throw ShapeError("fields do not share the same domain and lattice");
  }
}

namespace {

ScalarField combine(const ScalarField& a, const ScalarField& b, double (*op)(double, double)) {
  require_same_lattice(a, b);
  std::vector<double> v(a.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = op(a.values()[k], b.values()[k]);
  const Support s = (a.support() == Support::disk || b.support() == Support::disk) ? Support::disk
                                                                                     : Support::extended;
  return ScalarField(a.domain(), a.grid(), std::move(v), s);
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return combine(a, b, [](double x, double y) { return x + y; });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return combine(a, b, [](double x, double y) { return x - y; });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return combine(a, b, [](double x, double y) { return x * y; });
}

ScalarField operator*(double s, const ScalarField& a) {
  return a.map([s](double x) { return s * x; });
}

RectLattice lattice_of(const EllipseDomain& domain, const DiskGrid& grid) {
  return {-domain.a1(), domain.a1(), grid.side(), -domain.a2(), domain.a2(), grid.side()};
}

LatticeMap::LatticeMap(RectLattice lattice, std::vector<double> values)
    : lattice_(lattice), values_(std::move(values)) {
  if (lattice_.n1 < 4 || lattice_.n2 < 4) throw ShapeError("lattice needs at least 4 nodes per axis");
  if (!(lattice_.y1_max > lattice_.y1_min) || !(lattice_.y2_max > lattice_.y2_min)) {
    throw ShapeError("lattice bounds must be increasing");
  }
  const std::size_t n1 = static_cast<std::size_t>(lattice_.n1);
  const std::size_t n2 = static_cast<std::size_t>(lattice_.n2);
  if (values_.size() != n1 * n2) {
    std::ostringstream os;
    os << "lattice map has " << values_.size() << " values for a " << n1 << "x" << n2 << " lattice";
    throw ShapeError(os.str());
  }
  auto d = std::make_shared<Derivatives>();
  const std::size_t total = n1 * n2;
  d->d1.resize(total);
  d->d2.resize(total);
  d->d11.resize(total);
  d->d22.resize(total);
  d->d12.resize(total);
  const double h1 = lattice_.step1();
  const double h2 = lattice_.step2();
  for (std::size_t r = 0; r < n2; ++r) {
    differentiate_line(&values_[r * n1], 1, lattice_.n1, h1, &d->d1[r * n1], &d->d11[r * n1], 1);
  }
  for (std::size_t c = 0; c < n1; ++c) {
    differentiate_line(&values_[c], n1, lattice_.n2, h2, &d->d2[c], &d->d22[c], n1);
    differentiate_line(&d->d1[c], n1, lattice_.n2, h2, &d->d12[c], nullptr, n1);
  }
  deriv_ = std::move(d);
}

double LatticeMap::interpolate(const std::vector<double>& v, Vec2 y) const {
  const double u1 = (y.y1 - lattice_.y1_min) / lattice_.step1();
  const double u2 = (y.y2 - lattice_.y2_min) / lattice_.step2();
  const double tol = 1e-9;
  if (u1 < -tol || u2 < -tol || u1 > lattice_.n1 - 1 + tol || u2 > lattice_.n2 - 1 + tol) {
    std::ostringstream os;
    os << "point (" << y.y1 << ", " << y.y2 << ") lies outside the thickness-map lattice";
    throw DomainError(os.str());
  }
  const Stencil s1 = lagrange_stencil(u1, lattice_.n1);
  const Stencil s2 = lagrange_stencil(u2, lattice_.n2);
  const std::size_t n1 = static_cast<std::size_t>(lattice_.n1);
  double acc = 0.0;
  for (int b = 0; b < 4; ++b) {
    double row = 0.0;
    const std::size_t base = static_cast<std::size_t>(s2.first + b) * n1;
    for (int a = 0; a < 4; ++a) row += s1.w[a] * v[base + static_cast<std::size_t>(s1.first + a)];
    acc += s2.w[b] * row;
  }
  return acc;
}

double LatticeMap::operator()(Vec2 y) const { return interpolate(values_, y); }

Jet LatticeMap::jet(Vec2 y) const {
  return {interpolate(values_, y),     interpolate(deriv_->d1, y),  interpolate(deriv_->d2, y),
          interpolate(deriv_->d11, y), interpolate(deriv_->d22, y), interpolate(deriv_->d12, y)};
}

Field2 LatticeMap::to_field() const {
  auto self = std::make_shared<const LatticeMap>(*this);
  return Field2::from_jet([self](Vec2 y) { return self->jet(y); });
}

}  // namespace thinlayer
