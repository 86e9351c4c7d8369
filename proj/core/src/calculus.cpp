#include "thinlayer/calculus.hpp"

#include <vector>

#include "thinlayer/parallel.hpp"

namespace thinlayer {

namespace {

// d/dxi and d^2/dxi^2 at index k of a line of n samples.
struct LineDerivs {
  double first;
  double second;
};

template <class Get>
LineDerivs line_derivs(const Get& v, int k, int n, double h) {
  if (k == 0) {
    return {(-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h),
            (2.0 * v(0) - 5.0 * v(1) + 4.0 * v(2) - v(3)) / (h * h)};
  }
  if (k == n - 1) {
    return {(3.0 * v(k) - 4.0 * v(k - 1) + v(k - 2)) / (2.0 * h),
            (2.0 * v(k) - 5.0 * v(k - 1) + 4.0 * v(k - 2) - v(k - 3)) / (h * h)};
  }
  return {(v(k + 1) - v(k - 1)) / (2.0 * h), (v(k + 1) - 2.0 * v(k) + v(k - 1)) / (h * h)};
}

}  // namespace

ScalarField field_laplacian(const ScalarField& f) {
  const DiskGrid& g = f.grid();
  const int n = g.side();
  const double h = g.spacing();
  const double s1 = 1.0 / (f.domain().a1() * f.domain().a1());
  const double s2 = 1.0 / (f.domain().a2() * f.domain().a2());
  std::vector<double> out(g.size());
  parallel_rows(0, n, [&](int j) {
    for (int i = 0; i < n; ++i) {
      const double dxx = line_derivs([&](int k) { return f.at(k, j); }, i, n, h).second;
      const double dyy = line_derivs([&](int k) { return f.at(i, k); }, j, n, h).second;
      out[g.index(i, j)] = s1 * dxx + s2 * dyy;
    }
  });
  return ScalarField(f.domain(), g, std::move(out));
}

VectorField field_gradient(const ScalarField& f) {
  const DiskGrid& g = f.grid();
  const int n = g.side();
  const double h = g.spacing();
  const double s1 = 1.0 / f.domain().a1();
  const double s2 = 1.0 / f.domain().a2();
  std::vector<double> d1(g.size());
  std::vector<double> d2(g.size());
  parallel_rows(0, n, [&](int j) {
    for (int i = 0; i < n; ++i) {
      d1[g.index(i, j)] = s1 * line_derivs([&](int k) { return f.at(k, j); }, i, n, h).first;
      d2[g.index(i, j)] = s2 * line_derivs([&](int k) { return f.at(i, k); }, j, n, h).first;
    }
  });
  return {ScalarField(f.domain(), g, std::move(d1)), ScalarField(f.domain(), g, std::move(d2))};
}

ScalarField div_weighted_grad(const ScalarField& w, const ScalarField& f) {
  require_same_lattice(w, f);
  const DiskGrid& g = f.grid();
  const int n = g.side();
  const double h = g.spacing();
  const double s1 = 1.0 / (f.domain().a1() * f.domain().a1());
  const double s2 = 1.0 / (f.domain().a2() * f.domain().a2());

  // d/dxi (w d/dxi f) along one line; flux form away from the lattice edge.
  auto axis_term = [&](auto wv, auto fv, int k) {
    if (k == 0 || k == n - 1) {
      const LineDerivs dw = line_derivs(wv, k, n, h);
      const LineDerivs df = line_derivs(fv, k, n, h);
      return dw.first * df.first + wv(k) * df.second;
    }
    const double w_plus = 0.5 * (wv(k) + wv(k + 1));
    const double w_minus = 0.5 * (wv(k) + wv(k - 1));
    return (w_plus * (fv(k + 1) - fv(k)) - w_minus * (fv(k) - fv(k - 1))) / (h * h);
  };

  std::vector<double> out(g.size());
  parallel_rows(0, n, [&](int j) {
    for (int i = 0; i < n; ++i) {
      const double t1 = axis_term([&](int k) { return w.at(k, j); }, [&](int k) { return f.at(k, j); }, i);
      const double t2 = axis_term([&](int k) { return w.at(i, k); }, [&](int k) { return f.at(i, k); }, j);
      out[g.index(i, j)] = s1 * t1 + s2 * t2;
    }
  });
  return ScalarField(f.domain(), g, std::move(out));
}

}  // namespace thinlayer
