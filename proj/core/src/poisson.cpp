#include "thinlayer/poisson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "thinlayer/errors.hpp"
#include "thinlayer/parallel.hpp"

namespace thinlayer {

namespace {

constexpr double kMinFraction = 1e-12;

// Negated, symmetric positive definite operator -lap restricted to the
// interior nodes.
struct DiskOperator {
  std::vector<int> node;                    // lattice index of each unknown
  std::vector<std::array<int, 4>> nbr;      // unknown index or -1
  std::vector<double> diag;
  double c1 = 0.0;                          // 1/(a1^2 h^2)
  double c2 = 0.0;                          // 1/(a2^2 h^2)
  std::vector<int> row_start;               // unknowns of lattice row j
};

DiskOperator assemble(const EllipseDomain& domain, const DiskGrid& grid) {
  const int n = grid.side();
  const double h = grid.spacing();
  DiskOperator op;
  op.c1 = 1.0 / (domain.a1() * domain.a1() * h * h);
  op.c2 = 1.0 / (domain.a2() * domain.a2() * h * h);

  std::vector<int> unknown(grid.size(), -1);
  op.row_start.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j < n; ++j) {
    op.row_start[static_cast<std::size_t>(j)] = static_cast<int>(op.node.size());
    for (int i = 0; i < n; ++i) {
      if (grid.strictly_inside(i, j)) {
        unknown[grid.index(i, j)] = static_cast<int>(op.node.size());
        op.node.push_back(static_cast<int>(grid.index(i, j)));
      }
    }
  }
  op.row_start[static_cast<std::size_t>(n)] = static_cast<int>(op.node.size());

  op.nbr.resize(op.node.size());
  op.diag.resize(op.node.size());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int k = unknown[grid.index(i, j)];
      if (k < 0) continue;
      const double x = grid.coord(i);
      const double y = grid.coord(j);
      // Order: +xi1, -xi1, +xi2, -xi2.
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      double d = 0.0;
      for (int q = 0; q < 4; ++q) {
        const double c = di[q] != 0 ? op.c1 : op.c2;
        const int ii = i + di[q];
        const int jj = j + dj[q];
        const int nb = unknown[grid.index(ii, jj)];
        op.nbr[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = nb;
        if (nb >= 0) {
          d += c;
        } else {
          // Contour crossing between the node and its neighbour.
          const double frac = di[q] != 0 ? std::abs(di[q] * std::sqrt(1.0 - y * y) - x) / h
                                         : std::abs(dj[q] * std::sqrt(1.0 - x * x) - y) / h;
          d += c / std::max(frac, kMinFraction);
        }
      }
      op.diag[static_cast<std::size_t>(k)] = d;
    }
  }
  return op;
}

void apply(const DiskOperator& op, const std::vector<double>& x, std::vector<double>& y) {
  const int rows = static_cast<int>(op.row_start.size()) - 1;
  parallel_rows(0, rows, [&](int j) {
    for (int k = op.row_start[static_cast<std::size_t>(j)]; k < op.row_start[static_cast<std::size_t>(j) + 1];
         ++k) {
      const auto& nb = op.nbr[static_cast<std::size_t>(k)];
      double acc = op.diag[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
      if (nb[0] >= 0) acc -= op.c1 * x[static_cast<std::size_t>(nb[0])];
      if (nb[1] >= 0) acc -= op.c1 * x[static_cast<std::size_t>(nb[1])];
      if (nb[2] >= 0) acc -= op.c2 * x[static_cast<std::size_t>(nb[2])];
      if (nb[3] >= 0) acc -= op.c2 * x[static_cast<std::size_t>(nb[3])];
      y[static_cast<std::size_t>(k)] = acc;
    }
  });
}

// Dot product with a fixed summation order (per lattice row, then rows in
// sequence) so results do not depend on the thread count.
double dot(const DiskOperator& op, const std::vector<double>& a, const std::vector<double>& b) {
  const int rows = static_cast<int>(op.row_start.size()) - 1;
  std::vector<double> partial(static_cast<std::size_t>(rows), 0.0);
  parallel_rows(0, rows, [&](int j) {
    double s = 0.0;
    for (int k = op.row_start[static_cast<std::size_t>(j)]; k < op.row_start[static_cast<std::size_t>(j) + 1];
         ++k) {
      s += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
    }
    partial[static_cast<std::size_t>(j)] = s;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

PoissonResult poisson_solve_dirichlet(const EllipseDomain& domain, const ScalarField& rhs,
                                      const PoissonOptions& options) {
  if (domain.a1() != rhs.domain().a1() || domain.a2() != rhs.domain().a2()) {
    throw ShapeError("right-hand side is sampled on a different ellipse than the solve domain");
  }
  const DiskGrid& grid = rhs.grid();
  const DiskOperator op = assemble(domain, grid);
  const std::size_t n = op.node.size();
  const int budget = options.max_iterations > 0 ? options.max_iterations : 50 * grid.side();

  // Solve (-lap) u = -rhs.
  std::vector<double> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = -rhs.values()[static_cast<std::size_t>(op.node[k])];

  std::vector<double> u(n, 0.0);
  std::vector<double> r = b;
  const double b_norm = std::sqrt(dot(op, b, b));
  PoissonResult result{ScalarField::zeros(domain, grid, Support::disk), 0, 0.0};
  if (b_norm == 0.0) return result;

  std::vector<double> z(n);
  std::vector<double> p(n);
  std::vector<double> q(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / op.diag[k];
  p = z;
  double rz = dot(op, r, z);
  double rel = 1.0;
  int it = 0;
  while (it < budget) {
    apply(op, p, q);
    const double alpha = rz / dot(op, p, q);
    for (std::size_t k = 0; k < n; ++k) {
      u[k] += alpha * p[k];
      r[k] -= alpha * q[k];
    }
    ++it;
    rel = std::sqrt(dot(op, r, r)) / b_norm;
    if (rel <= options.rel_tol) break;
    for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / op.diag[k];
    const double rz_next = dot(op, r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
  }
  if (!(rel <= options.rel_tol)) {
    std::ostringstream os;
    os << "Poisson solve stopped after " << it << " iterations with relative residual " << rel
       << " (target " << options.rel_tol << ")";
    throw SolverError(os.str());
  }

  std::vector<double> values(grid.size(), 0.0);
  for (std::size_t k = 0; k < n; ++k) values[static_cast<std::size_t>(op.node[k])] = u[k];
  result.solution = ScalarField(domain, grid, std::move(values), Support::disk);
  result.iterations = it;
  result.relative_residual = rel;
  return result;
}

}  // namespace thinlayer
