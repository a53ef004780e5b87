#include "mhd/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "mhd/dissipation.hpp"
#include "mhd/flux.hpp"

namespace mhd {

namespace {

struct InterfaceTerms {
  Vec8 flux;
  Vec8 source;
};

InterfaceTerms interface_terms(const RhsOptions& opt, const PrimState& pL, const PrimState& pR,
                               double dxL, double dxR, Direction d) {
  InterfaceTerms it;
  it.flux = interface_flux(opt.flux, pL, pR, opt.gamma, d);
  it.source = opt.flux == FluxKind::EKEC
                  ? janhunen_interface_source_beta(pL, pR, dxL, dxR, opt.gamma, d).s
                  : janhunen_interface_source(pL, pR, dxL, dxR, opt.gamma, d).s;
  return it;
}

// Index of the neighbour across a boundary, or the boundary cell itself for outflow.
std::size_t wrap(std::ptrdiff_t i, std::size_t n, BoundaryKind bc) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  if (i < 0) return bc == BoundaryKind::Periodic ? n - 1 : 0;
  if (i >= sn) return bc == BoundaryKind::Periodic ? 0 : n - 1;
  return static_cast<std::size_t>(i);
}

constexpr std::array<double, 5> kA = {
    0.0, -567301805773.0 / 1357537059087.0, -2404267990393.0 / 2016746695238.0,
    -3550918686646.0 / 2091501179385.0, -1275806237668.0 / 842570457699.0};
constexpr std::array<double, 5> kB = {
    1432997174477.0 / 9575080441755.0, 5161836677717.0 / 13612068292357.0,
    1720146321549.0 / 2090206949498.0, 3134564353537.0 / 4481467310338.0,
    2277821191437.0 / 14882151754819.0};
constexpr std::array<double, 5> kC = {
    0.0, 1432997174477.0 / 9575080441755.0, 2526269341429.0 / 6820363183890.0,
    2006345519317.0 / 3224310063776.0, 2802321613138.0 / 2924317926251.0};

}  // namespace

Vec8 interface_flux(FluxKind kind, const PrimState& pL, const PrimState& pR, double gamma,
                    Direction d) {
  switch (kind) {
    case FluxKind::EKEC: return ekec_flux(pL, pR, gamma, d);
    case FluxKind::ES_ROE: return es_roe_flux(pL, pR, gamma, d);
    case FluxKind::ES_LLF: return es_llf_flux(pL, pR, gamma, d);
    default: return ec_flux(pL, pR, gamma, d);
  }
}

std::vector<PrimState> to_primitive(const Field& q, double gamma) {
  std::vector<PrimState> prim(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    try {
      prim[i] = cons_to_prim(q[i], gamma);
    } catch (const StateError& e) {
      throw CellStateError(e, i);
    }
  }
  return prim;
}

void semidiscrete_rhs_1d(const Field& q, const Grid1D& grid, const RhsOptions& opt, double t,
                         Field& out) {
  const std::size_t n = q.size();
  if (n != grid.size()) throw InvalidExtent("field and grid sizes differ");
  const std::vector<PrimState> prim = to_primitive(q, opt.gamma);

  // Interface k separates cells k-1 and k, k = 0..n.
  std::vector<InterfaceTerms> faces(n + 1);
  const auto nf = static_cast<std::ptrdiff_t>(n + 1);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nf; ++k) {
    const std::size_t l = wrap(k - 1, n, opt.bc);
    const std::size_t r = wrap(k, n, opt.bc);
    faces[k] = interface_terms(opt, prim[l], prim[r], grid.widths[l], grid.widths[r],
                               Direction::X);
  }

  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].q = -(faces[i + 1].flux - faces[i].flux) / grid.widths[i] +
               0.5 * (faces[i].source + faces[i + 1].source);
    if (opt.source) out[i].q += opt.source(grid.centers[i], t);
  }
}

void semidiscrete_rhs_2d(const Field& q, const Grid2D& grid, const RhsOptions& opt, double t,
                         Field& out) {
  const std::size_t nx = grid.nx, ny = grid.ny;
  if (q.size() != grid.size()) throw InvalidExtent("field and grid sizes differ");
  const std::vector<PrimState> prim = to_primitive(q, opt.gamma);

  // x-faces: (nx + 1) per row; y-faces: (ny + 1) per column, stored column-major.
  std::vector<InterfaceTerms> fx((nx + 1) * ny);
  std::vector<InterfaceTerms> fy((ny + 1) * nx);
  const auto nfx = static_cast<std::ptrdiff_t>(fx.size());
  const auto nfy = static_cast<std::ptrdiff_t>(fy.size());
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t f = 0; f < nfx; ++f) {
      const auto j = static_cast<std::size_t>(f) / (nx + 1);
      const auto k = static_cast<std::ptrdiff_t>(static_cast<std::size_t>(f) % (nx + 1));
      const std::size_t l = grid.index(wrap(k - 1, nx, opt.bc), j);
      const std::size_t r = grid.index(wrap(k, nx, opt.bc), j);
      fx[f] = interface_terms(opt, prim[l], prim[r], grid.dx, grid.dx, Direction::X);
    }
#pragma omp for schedule(static)
    for (std::ptrdiff_t f = 0; f < nfy; ++f) {
      const auto i = static_cast<std::size_t>(f) / (ny + 1);
      const auto k = static_cast<std::ptrdiff_t>(static_cast<std::size_t>(f) % (ny + 1));
      const std::size_t l = grid.index(i, wrap(k - 1, ny, opt.bc));
      const std::size_t r = grid.index(i, wrap(k, ny, opt.bc));
      fy[f] = interface_terms(opt, prim[l], prim[r], grid.dy, grid.dy, Direction::Y);
    }
  }

  out.resize(q.size());
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const InterfaceTerms& w = fx[j * (nx + 1) + i];
      const InterfaceTerms& e = fx[j * (nx + 1) + i + 1];
      const InterfaceTerms& s = fy[i * (ny + 1) + j];
      const InterfaceTerms& nn = fy[i * (ny + 1) + j + 1];
      Vec8 r = -(e.flux - w.flux) / grid.dx - (nn.flux - s.flux) / grid.dy +
               0.5 * (w.source + e.source) + 0.5 * (s.source + nn.source);
      if (opt.source) r += opt.source(grid.x(i), t);
      out[grid.index(i, j)].q = r;
    }
  }
}

double stable_dt(const Field& q, const Grid1D& grid, double gamma, double cfl) {
  const std::vector<PrimState> prim = to_primitive(q, gamma);
  double dt = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < prim.size(); ++i) {
    const double lam = std::abs(prim[i].u) + wave_speeds(prim[i], gamma, Direction::X).c_f;
    dt = std::min(dt, grid.widths[i] / lam);
  }
  return cfl * dt;
}

double stable_dt(const Field& q, const Grid2D& grid, double gamma, double cfl) {
  const std::vector<PrimState> prim = to_primitive(q, gamma);
  double dt = std::numeric_limits<double>::infinity();
  for (const PrimState& p : prim) {
    const double lx = std::abs(p.u) + wave_speeds(p, gamma, Direction::X).c_f;
    const double ly = std::abs(p.v) + wave_speeds(p, gamma, Direction::Y).c_f;
    dt = std::min(dt, 1.0 / (lx / grid.dx + ly / grid.dy));
  }
  return cfl * dt;
}

Field lserk45_step(const Field& q, double t, double dt, const RhsFn& rhs) {
  Field u = q;
  Field k(q.size());
  Field r;
  for (std::size_t s = 0; s < kA.size(); ++s) {
    rhs(u, t + kC[s] * dt, r);
    for (std::size_t i = 0; i < u.size(); ++i) {
      k[i].q = kA[s] * k[i].q + dt * r[i].q;
      u[i].q += kB[s] * k[i].q;
    }
  }
  return u;
}

Field rk2_step(const Field& q, double t, double dt, const RhsFn& rhs) {
  Field r;
  rhs(q, t, r);
  Field u1 = q;
  for (std::size_t i = 0; i < q.size(); ++i) u1[i].q += dt * r[i].q;
  rhs(u1, t + dt, r);
  Field out = q;
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i].q = 0.5 * q[i].q + 0.5 * (u1[i].q + dt * r[i].q);
  }
  return out;
}

Field rk_step(RKScheme scheme, const Field& q, double t, double dt, const RhsFn& rhs) {
  return scheme == RKScheme::RK2 ? rk2_step(q, t, dt, rhs) : lserk45_step(q, t, dt, rhs);
}

std::size_t advance(Field& q, double t0, double t_end, RKScheme scheme, const RhsFn& rhs,
                    const std::function<double(const Field&)>& dt_fn,
                    const std::function<void(const Field&, double)>& observe) {
  double t = t0;
  std::size_t steps = 0;
  while (t < t_end) {
    double dt = dt_fn(q);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw StateError(StateErrorKind::NonFinite, "time step is not positive and finite");
    }
    const bool last = t + dt >= t_end;
    if (last) dt = t_end - t;
    q = rk_step(scheme, q, t, dt, rhs);
    t = last ? t_end : t + dt;
    ++steps;
    if (observe) observe(q, t);
  }
  return steps;
}

}  // namespace mhd
