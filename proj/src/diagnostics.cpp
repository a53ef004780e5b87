#include "mhd/diagnostics.hpp"

#include <cmath>

namespace mhd {

namespace {

void accumulate(ConservationLedger& led, const ConsState& c, double measure, double gamma) {
  for (int k = 0; k < 8; ++k) led.totals[k] += measure * c.q[k];
  led.total_entropy += measure * entropy_quantities(c, gamma).U;
}

}  // namespace

ConservationLedger integrate_conserved(const Field& q, const Grid1D& grid, double gamma,
                                       double time) {
  if (q.size() != grid.size()) throw GridMismatch("field and grid sizes differ");
  ConservationLedger led;
  led.time = time;
  led.cells = q.size();
  led.measure = grid.xmax - grid.xmin;
  for (std::size_t i = 0; i < q.size(); ++i) accumulate(led, q[i], grid.widths[i], gamma);
  return led;
}

ConservationLedger integrate_conserved(const Field& q, const Grid2D& grid, double gamma,
                                       double time) {
  if (q.size() != grid.size()) throw GridMismatch("field and grid sizes differ");
  ConservationLedger led;
  led.time = time;
  led.cells = q.size();
  led.measure = (grid.xmax - grid.xmin) * (grid.ymax - grid.ymin);
  const double area = grid.dx * grid.dy;
  for (const ConsState& c : q) accumulate(led, c, area, gamma);
  return led;
}

LedgerDelta delta_e(const ConservationLedger& a, const ConservationLedger& b) {
  if (a.cells != b.cells || a.measure != b.measure) {
    throw GridMismatch("ledgers were integrated over different grids");
  }
  LedgerDelta d;
  for (int k = 0; k < 8; ++k) d.totals[k] = std::abs(a.totals[k] - b.totals[k]);
  d.entropy = std::abs(a.total_entropy - b.total_entropy);
  return d;
}

std::array<double, 8> l2_error(const Field& q, const ExactFn& exact, const Grid1D& grid,
                               double t) {
  if (q.size() != grid.size()) throw GridMismatch("field and grid sizes differ");
  std::array<double, 8> sums{};
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vec8 diff = q[i].q - exact(grid.centers[i], t);
    for (int k = 0; k < 8; ++k) sums[k] += grid.widths[i] * diff[k] * diff[k];
  }
  for (double& s : sums) s = std::sqrt(s);
  return sums;
}

EocResult eoc(const std::vector<double>& errors, const std::vector<std::size_t>& cells) {
  if (errors.size() != cells.size() || errors.size() < 2) {
    throw LengthMismatch("eoc needs matching error and cell lists of length >= 2");
  }
  EocResult r;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    r.rates.push_back(std::log(errors[k] / errors[k + 1]) /
                      std::log(static_cast<double>(cells[k + 1]) / static_cast<double>(cells[k])));
  }
  double sum = 0.0;
  for (double v : r.rates) sum += v;
  r.mean = sum / static_cast<double>(r.rates.size());
  return r;
}

std::vector<double> discrete_div_b(const Field& q, const Grid2D& grid) {
  if (q.size() != grid.size()) throw GridMismatch("field and grid sizes differ");
  std::vector<double> div(q.size());
  for (std::size_t j = 0; j < grid.ny; ++j) {
    const std::size_t jp = (j + 1) % grid.ny;
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const std::size_t ip = (i + 1) % grid.nx;
      const std::size_t c = grid.index(i, j);
      div[c] = (q[grid.index(ip, j)].mag(0) - q[c].mag(0)) / grid.dx +
               (q[grid.index(i, jp)].mag(1) - q[c].mag(1)) / grid.dy;
    }
  }
  return div;
}

}  // namespace mhd
