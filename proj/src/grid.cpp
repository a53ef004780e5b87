#include "mhd/grid.hpp"

#include <cmath>

namespace mhd {

namespace {

void check_extent(std::size_t n, double xmin, double xmax) {
  if (n < 2) throw InvalidExtent("grid needs at least 2 cells");
  if (!(xmax > xmin) || !std::isfinite(xmin) || !std::isfinite(xmax)) {
    throw InvalidExtent("grid needs xmax > xmin");
  }
}

}  // namespace

Grid1D make_uniform_grid(std::size_t n, double xmin, double xmax) {
  check_extent(n, xmin, xmax);
  Grid1D g;
  g.xmin = xmin;
  g.xmax = xmax;
  const double dx = (xmax - xmin) / static_cast<double>(n);
  g.widths.assign(n, dx);
  g.centers.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.centers[i] = xmin + (static_cast<double>(i) + 0.5) * dx;
  }
  return g;
}

Grid1D make_stretched_grid(std::size_t n, double xmin, double xmax, double ratio) {
  check_extent(n, xmin, xmax);
  if (!(ratio >= 1.0) || !std::isfinite(ratio)) {
    throw InvalidExtent("stretch ratio must be >= 1");
  }
  if (ratio == 1.0) return make_uniform_grid(n, xmin, xmax);
  const double q = std::pow(ratio, 1.0 / static_cast<double>(n - 1));
  std::vector<double> w(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(q, static_cast<double>(i));
    sum += w[i];
  }
  const double scale = (xmax - xmin) / sum;
  Grid1D g;
  g.xmin = xmin;
  g.xmax = xmax;
  g.widths.resize(n);
  g.centers.resize(n);
  double left = xmin;
  for (std::size_t i = 0; i < n; ++i) {
    g.widths[i] = w[i] * scale;
    g.centers[i] = left + 0.5 * g.widths[i];
    left += g.widths[i];
  }
  return g;
}

Grid2D make_grid_2d(std::size_t nx, std::size_t ny, double xmin, double xmax, double ymin,
                    double ymax) {
  check_extent(nx, xmin, xmax);
  check_extent(ny, ymin, ymax);
  Grid2D g;
  g.nx = nx;
  g.ny = ny;
  g.xmin = xmin;
  g.xmax = xmax;
  g.ymin = ymin;
  g.ymax = ymax;
  g.dx = (xmax - xmin) / static_cast<double>(nx);
  g.dy = (ymax - ymin) / static_cast<double>(ny);
  return g;
}

std::pair<ConsState, ConsState> ghost_states(const Field& field, BoundaryKind bc) {
  if (field.empty()) throw InvalidExtent("ghost_states on empty field");
  if (bc == BoundaryKind::Periodic) return {field.back(), field.front()};
  return {field.front(), field.back()};
}

}  // namespace mhd
