/// \file diagnostics.hpp
/// Conservation ledgers, L2 errors, convergence orders and discrete divergence of B.

#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mhd/grid.hpp"
#include "mhd/state.hpp"

namespace mhd {

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConservationLedger {
  double time = 0.0;
  std::array<double, 8> totals{};
  double total_entropy = 0.0;
  std::size_t cells = 0;
  double measure = 0.0;  ///< domain length or area
};

struct LedgerDelta {
  std::array<double, 8> totals{};
  double entropy = 0.0;
};

/// Midpoint-rule totals with sequential summation in cell order.
ConservationLedger integrate_conserved(const Field& q, const Grid1D& grid, double gamma,
                                       double time = 0.0);
ConservationLedger integrate_conserved(const Field& q, const Grid2D& grid, double gamma,
                                       double time = 0.0);

/// Absolute differences; throws GridMismatch if the ledgers come from different grids.
LedgerDelta delta_e(const ConservationLedger& initial, const ConservationLedger& final_);

using ExactFn = std::function<Vec8(double x, double t)>;

/// sqrt(sum dx_i (q_i - exact(x_i, t))^2) per conserved variable.
std::array<double, 8> l2_error(const Field& q, const ExactFn& exact, const Grid1D& grid,
                               double t);

struct EocResult {
  std::vector<double> rates;
  double mean = 0.0;
};

/// rate_k = ln(e_k / e_{k+1}) / ln(N_{k+1} / N_k); throws LengthMismatch.
EocResult eoc(const std::vector<double>& errors, const std::vector<std::size_t>& cells);

/// Forward-difference divergence with periodic wrap, one value per cell (row-major).
std::vector<double> discrete_div_b(const Field& q, const Grid2D& grid);

}  // namespace mhd
