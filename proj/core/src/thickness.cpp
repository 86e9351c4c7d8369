#include "thinlayer/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thinlayer/errors.hpp"
#include "thinlayer/grid.hpp"

namespace thinlayer {

LayerThickness::LayerThickness(double h, double eps, Field2 variation)
    : h_(h), eps_(eps), variation_(std::move(variation)) {
  if (!(h > 0.0)) throw DomainError("mean layer thickness must be positive");
  if (!(eps > 0.0)) throw DomainError("small parameter eps must be positive");
}

Field2 LayerThickness::variation_star() const { return variation_.affine(1.0 / (eps_ * eps_), 0.0); }

Field2 LayerThickness::psi_star() const {
  return variation_.affine(1.0 / (eps_ * eps_ * h_star()), 0.0);
}

namespace {

// Largest |H - h| over the closed domain; throws on nonpositive H.
double checked_max_deviation(const Field2& H, double h, const EllipseDomain& domain, int check_cells) {
  const DiskGrid grid(check_cells);
  double dev = 0.0;
  for (int j = 0; j < grid.side(); ++j) {
    for (int i = 0; i < grid.side(); ++i) {
      if (grid.radius2(i, j) > 1.0) continue;
      const Vec2 y = domain.from_unit({grid.coord(i), grid.coord(j)});
      const double value = H(y);
      if (!(value > 0.0)) {
        std::ostringstream os;
        os << "layer thickness must stay positive, H(" << y.y1 << ", " << y.y2 << ") = " << value;
        throw DomainError(os.str());
      }
      dev = std::max(dev, std::abs(value - h));
    }
  }
  return dev;
}

}  // namespace

LayerThickness thickness_decompose(const Field2& H, double h, double eps, const EllipseDomain& domain,
                                   int check_cells) {
  checked_max_deviation(H, h, domain, check_cells);
  return {h, eps, H.affine(1.0, -h)};
}

LayerThickness thickness_decompose(const Field2& H, double h, const EllipseDomain& domain,
                                   int check_cells) {
  if (!(h > 0.0)) throw DomainError("mean layer thickness must be positive");
  const double dev = checked_max_deviation(H, h, domain, check_cells);
  const double eps = dev > 0.0 ? dev / h : 1.0;
  return {h, eps, H.affine(1.0, -h)};
}

}  // namespace thinlayer
