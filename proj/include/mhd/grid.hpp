/// \file grid.hpp
/// Structured 1D and 2D grids and ghost-cell boundary handling.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mhd/state.hpp"

namespace mhd {

enum class BoundaryKind { Periodic, Outflow };

class InvalidExtent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Field = std::vector<ConsState>;
using Field1D = Field;
/// Row-major: cell (i, j) lives at j * nx + i.
using Field2D = Field;

struct Grid1D {
  double xmin = 0.0, xmax = 1.0;
  std::vector<double> centers;
  std::vector<double> widths;

  std::size_t size() const { return widths.size(); }
};

struct Grid2D {
  std::size_t nx = 0, ny = 0;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  double dx = 0.0, dy = 0.0;

  std::size_t size() const { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
  double x(std::size_t i) const { return xmin + (static_cast<double>(i) + 0.5) * dx; }
  double y(std::size_t j) const { return ymin + (static_cast<double>(j) + 0.5) * dy; }
};

Grid1D make_uniform_grid(std::size_t n, double xmin, double xmax);

/// Geometric progression of widths with widths.back() / widths.front() == ratio.
Grid1D make_stretched_grid(std::size_t n, double xmin, double xmax, double ratio);

Grid2D make_grid_2d(std::size_t nx, std::size_t ny, double xmin, double xmax, double ymin,
                    double ymax);

/// Left and right ghost cells: wrap-around for Periodic, copy of the boundary cell for Outflow.
std::pair<ConsState, ConsState> ghost_states(const Field& field, BoundaryKind bc);

}  // namespace mhd
