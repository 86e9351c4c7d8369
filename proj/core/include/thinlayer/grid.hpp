#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "thinlayer/field.hpp"
#include "thinlayer/types.hpp"

namespace thinlayer {

// Uniform lattice on the square [-1, 1]^2 of mapped coordinates
// xi = (y1/a1, y2/a2), with `cells` intervals per side. Node (i, j) sits at
// (coord(i), coord(j)); storage is row-major with j (the xi2 index) as row.
class DiskGrid {
 public:
  static constexpr int kMinCells = 16;

  explicit DiskGrid(int cells);

  int cells() const { return cells_; }
  int side() const { return cells_ + 1; }
  std::size_t size() const { return static_cast<std::size_t>(side()) * static_cast<std::size_t>(side()); }
  double spacing() const { return 2.0 / cells_; }
  // Exactly antisymmetric under i -> cells - i.
  double coord(int i) const { return static_cast<double>(2 * i - cells_) / cells_; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(side()) + static_cast<std::size_t>(i);
  }
  double radius2(int i, int j) const { return coord(i) * coord(i) + coord(j) * coord(j); }
  bool strictly_inside(int i, int j) const { return radius2(i, j) < 1.0; }

  friend bool operator==(const DiskGrid& a, const DiskGrid& b) { return a.cells_ == b.cells_; }

 private:
  int cells_;
};

// Where the samples of a ScalarField are meaningful.
enum class Support {
  // Smooth values on the whole square lattice (sampled closed forms).
  extended,
  // Values only on the closed disk, zero outside (Dirichlet solutions).
  disk,
};

// Grid-sampled scalar field on an elliptical domain.
class ScalarField {
 public:
  ScalarField(EllipseDomain domain, DiskGrid grid, std::vector<double> values,
              Support support = Support::extended);

  static ScalarField sample(const EllipseDomain& domain, const DiskGrid& grid,
                            const std::function<double(Vec2)>& fn);
  static ScalarField sample(const EllipseDomain& domain, const DiskGrid& grid, const Field2& f);
  static ScalarField zeros(const EllipseDomain& domain, const DiskGrid& grid,
                           Support support = Support::extended);

  const EllipseDomain& domain() const { return domain_; }
  const DiskGrid& grid() const { return grid_; }
  Support support() const { return support_; }
  std::span<const double> values() const { return values_; }
  double at(int i, int j) const { return values_[grid_.index(i, j)]; }
  // Physical coordinates of node (i, j).
  Vec2 point(int i, int j) const;

  // Fourth-order local Lagrange interpolation in mapped coordinates.
  double interpolate(Vec2 y) const;

  // Field2 view with derivatives from lattice differences, interpolated.
  Field2 to_field() const;

  ScalarField map(const std::function<double(double)>& fn) const;
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(double s, const ScalarField& a);
  // Pointwise product.
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);

 private:
  EllipseDomain domain_;
  DiskGrid grid_;
  std::vector<double> values_;
  Support support_;
};

// Throws ShapeError unless both fields live on the same domain and lattice.
void require_same_lattice(const ScalarField& a, const ScalarField& b);

// Rectangular lattice of samples in physical coordinates, as ingested from
// a thickness-map file.
struct RectLattice {
  double y1_min = 0.0;
  double y1_max = 0.0;
  int n1 = 0;
  double y2_min = 0.0;
  double y2_max = 0.0;
  int n2 = 0;

  double step1() const { return (y1_max - y1_min) / (n1 - 1); }
  double step2() const { return (y2_max - y2_min) / (n2 - 1); }
};

// Interpolating map over a RectLattice (row-major, y1 fastest). Queries
// outside the lattice box raise DomainError.
class LatticeMap {
 public:
  LatticeMap(RectLattice lattice, std::vector<double> values);

  const RectLattice& lattice() const { return lattice_; }
  std::span<const double> values() const { return values_; }
  double operator()(Vec2 y) const;
  Jet jet(Vec2 y) const;
  Field2 to_field() const;

 private:
  struct Derivatives {
    std::vector<double> d1, d2, d11, d22, d12;
  };

  double interpolate(const std::vector<double>& v, Vec2 y) const;

  RectLattice lattice_;
  std::vector<double> values_;
  std::shared_ptr<const Derivatives> deriv_;
};

// Physical lattice of a ScalarField's grid over the bounding box of its
// domain.
RectLattice lattice_of(const EllipseDomain& domain, const DiskGrid& grid);

}  // namespace thinlayer
