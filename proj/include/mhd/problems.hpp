/// \file problems.hpp
/// Initial conditions, the manufactured solution and canonical test problems.

#pragma once

#include <stdexcept>
#include <string>

#include "mhd/grid.hpp"
#include "mhd/state.hpp"

namespace mhd {

enum class ProblemId { Manufactured, BrioWu, RyuJones, Torrilhon, ShockTube25D, Rotor };

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemSpec {
  ProblemId id = ProblemId::Manufactured;
  std::string name;
  double gamma = 5.0 / 3.0;
  double xmin = 0.0, xmax = 1.0;
  double ymin = 0.0, ymax = 1.0;  ///< used by 2D problems only
  double t_final = 1.0;
  BoundaryKind bc = BoundaryKind::Periodic;
  double split = 0.5;  ///< discontinuity location for 1D Riemann problems
  PrimState left, right;
};

ProblemSpec problem_spec(ProblemId id);

/// Accepts "manufactured", "brio_wu", "ryu_jones", "torrilhon", "shock_tube_25d", "rotor".
ProblemId parse_problem(const std::string& name);
std::string problem_name(ProblemId id);

/// rho = 2 + sin(2 pi (x - t)), u = v = w = 1, p = rho^2, B = (1, rho, rho).
PrimState manufactured_state(double x, double t);
Vec8 manufactured_source(double x, double t);
Vec8 manufactured_cons(double x, double t, double gamma);

/// Piecewise-constant data sampled at cell centers; throws DomainMismatch if the grid
/// does not span the problem domain.
Field1D init_riemann(const ProblemSpec& spec, const Grid1D& grid);
Field1D init_manufactured(const Grid1D& grid, double gamma);

Field2D init_shock_tube_25d(const Grid2D& grid);
Field2D init_rotor(const Grid2D& grid);

}  // namespace mhd
