/// \file integrate.hpp
/// Semidiscrete finite volume right-hand sides and explicit Runge-Kutta integrators.

#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "mhd/grid.hpp"
#include "mhd/state.hpp"

namespace mhd {

enum class FluxKind { EC, EKEC, ES_ROE, ES_LLF };
enum class RKScheme { LSERK45, RK2 };

/// A state error tagged with the offending cell (row-major index in 2D).
class CellStateError : public StateError {
 public:
  CellStateError(const StateError& e, std::size_t cell)
      : StateError(e.kind(), std::string(e.what()) + " in cell " + std::to_string(cell)),
        cell_(cell) {}
  std::size_t cell() const { return cell_; }

 private:
  std::size_t cell_;
};

Vec8 interface_flux(FluxKind kind, const PrimState& pL, const PrimState& pR, double gamma,
                    Direction d);

/// Analytic source evaluated at a cell center.
using PointSource = std::function<Vec8(double x, double t)>;

/// Right-hand side q_t = R(q, t), written into out (resized as needed).
using RhsFn = std::function<void(const Field& q, double t, Field& out)>;

struct RhsOptions {
  double gamma = 5.0 / 3.0;
  FluxKind flux = FluxKind::EC;
  BoundaryKind bc = BoundaryKind::Periodic;
  PointSource source;  ///< optional
};

/// Converts every cell to primitives; throws CellStateError on the first invalid cell.
std::vector<PrimState> to_primitive(const Field& q, double gamma);

void semidiscrete_rhs_1d(const Field& q, const Grid1D& grid, const RhsOptions& opt, double t,
                         Field& out);
void semidiscrete_rhs_2d(const Field& q, const Grid2D& grid, const RhsOptions& opt, double t,
                         Field& out);

double stable_dt(const Field& q, const Grid1D& grid, double gamma, double cfl);
double stable_dt(const Field& q, const Grid2D& grid, double gamma, double cfl);

/// Carpenter-Kennedy five-stage fourth order 2N-storage scheme.
Field lserk45_step(const Field& q, double t, double dt, const RhsFn& rhs);
/// Two-stage second order strong-stability-preserving scheme (Heun).
Field rk2_step(const Field& q, double t, double dt, const RhsFn& rhs);
Field rk_step(RKScheme scheme, const Field& q, double t, double dt, const RhsFn& rhs);

/// Step q from t0 to t_end with dt = dt_fn(q) recomputed every step, clipping the last step.
/// observe(q, t) is called after every accepted step. Returns the number of steps.
std::size_t advance(Field& q, double t0, double t_end, RKScheme scheme, const RhsFn& rhs,
                    const std::function<double(const Field&)>& dt_fn,
                    const std::function<void(const Field&, double)>& observe = {});

}  // namespace mhd
