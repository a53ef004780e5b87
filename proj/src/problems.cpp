#include "mhd/problems.hpp"

#include <cmath>
#include <numbers>

namespace mhd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDomainTol = 1e-12;

bool same(double a, double b) { return std::abs(a - b) <= kDomainTol * (1.0 + std::abs(a)); }

void check_domain(const ProblemSpec& s, double xmin, double xmax) {
  if (!same(s.xmin, xmin) || !same(s.xmax, xmax)) {
    throw DomainMismatch("grid does not span the domain of problem " + s.name);
  }
}

void check_domain_2d(const ProblemSpec& s, const Grid2D& g) {
  check_domain(s, g.xmin, g.xmax);
  if (!same(s.ymin, g.ymin) || !same(s.ymax, g.ymax)) {
    throw DomainMismatch("grid does not span the domain of problem " + s.name);
  }
}

PrimState prim(double rho, double u, double v, double w, double p, double b1, double b2,
               double b3) {
  return PrimState{rho, u, v, w, p, b1, b2, b3};
}

}  // namespace

ProblemSpec problem_spec(ProblemId id) {
  ProblemSpec s;
  s.id = id;
  s.name = problem_name(id);
  const double s4pi = std::sqrt(4.0 * kPi);
  switch (id) {
    case ProblemId::Manufactured:
      s.xmin = -1.0;
      s.xmax = 1.0;
      s.t_final = 2.0;
      break;
    case ProblemId::BrioWu:
      s.gamma = 2.0;
      s.t_final = 0.12;
      s.bc = BoundaryKind::Outflow;
      s.split = 0.5;
      s.left = prim(1.0, 0, 0, 0, 1.0, 0.75, 1.0, 0);
      s.right = prim(0.125, 0, 0, 0, 0.1, 0.75, -1.0, 0);
      break;
    case ProblemId::RyuJones:
      s.xmin = -1.0;
      s.xmax = 1.0;
      s.t_final = 0.4;
      s.bc = BoundaryKind::Outflow;
      s.split = 0.0;
      s.left = prim(1.0, 0, 0, 0, 1.0, 0.7, 0, 0);
      s.right = prim(0.3, 0, 0, 1.0, 0.2, 0.7, 1.0, 0);
      break;
    case ProblemId::Torrilhon:
      s.xmin = -1.0;
      s.xmax = 1.5;
      s.t_final = 0.4;
      s.bc = BoundaryKind::Outflow;
      s.split = 0.0;
      s.left = prim(3.0, 0, 0, 0, 3.0, 1.5, 1.0, 0);
      s.right = prim(1.0, 0, 0, 0, 1.0, 1.5, std::cos(1.5), std::sin(1.5));
      break;
    case ProblemId::ShockTube25D:
      s.t_final = 0.2;
      s.left = prim(1.08, 1.2, 0.01, 0.5, 0.95, 2.0 / s4pi, 2.0 / s4pi, 3.6 / s4pi);
      s.right = prim(1.0, 0, 0, 0, 1.0, 2.0 / s4pi, 4.0 / s4pi, 2.0 / s4pi);
      break;
    case ProblemId::Rotor:
      s.gamma = 1.4;
      s.t_final = 0.15;
      break;
  }
  return s;
}

ProblemId parse_problem(const std::string& name) {
  for (ProblemId id : {ProblemId::Manufactured, ProblemId::BrioWu, ProblemId::RyuJones,
                       ProblemId::Torrilhon, ProblemId::ShockTube25D, ProblemId::Rotor}) {
    if (problem_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::string problem_name(ProblemId id) {
  switch (id) {
    case ProblemId::Manufactured: return "manufactured";
    case ProblemId::BrioWu: return "brio_wu";
    case ProblemId::RyuJones: return "ryu_jones";
    case ProblemId::Torrilhon: return "torrilhon";
    case ProblemId::ShockTube25D: return "shock_tube_25d";
    case ProblemId::Rotor: return "rotor";
  }
  return "unknown";
}

PrimState manufactured_state(double x, double t) {
  const double rho = 2.0 + std::sin(2.0 * kPi * (x - t));
  return prim(rho, 1.0, 1.0, 1.0, rho * rho, 1.0, rho, rho);
}

Vec8 manufactured_source(double x, double t) {
  const double rho = 2.0 + std::sin(2.0 * kPi * (x - t));
  const double rho_x = 2.0 * kPi * std::cos(2.0 * kPi * (x - t));
  Vec8 s;
  s << 0.0, 4.0 * rho * rho_x, -rho_x, -rho_x, 4.0 * rho * rho_x - 2.0 * rho_x, 0.0, 0.0, 0.0;
  return s;
}

Vec8 manufactured_cons(double x, double t, double gamma) {
  return prim_to_cons(manufactured_state(x, t), gamma).q;
}

Field1D init_riemann(const ProblemSpec& spec, const Grid1D& grid) {
  check_domain(spec, grid.xmin, grid.xmax);
  Field1D f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f[i] = prim_to_cons(grid.centers[i] < spec.split ? spec.left : spec.right, spec.gamma);
  }
  return f;
}

Field1D init_manufactured(const Grid1D& grid, double gamma) {
  check_domain(problem_spec(ProblemId::Manufactured), grid.xmin, grid.xmax);
  Field1D f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f[i] = prim_to_cons(manufactured_state(grid.centers[i], 0.0), gamma);
  }
  return f;
}

Field2D init_shock_tube_25d(const Grid2D& grid) {
  const ProblemSpec s = problem_spec(ProblemId::ShockTube25D);
  check_domain_2d(s, grid);
  Field2D f(grid.size());
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const bool left = grid.x(i) + grid.y(j) < 0.5;
      f[grid.index(i, j)] = prim_to_cons(left ? s.left : s.right, s.gamma);
    }
  }
  return f;
}

Field2D init_rotor(const Grid2D& grid) {
  const ProblemSpec s = problem_spec(ProblemId::Rotor);
  check_domain_2d(s, grid);
  constexpr double r0 = 0.1, r1 = 0.115, u0 = 2.0;
  const double b1 = 5.0 / std::sqrt(4.0 * kPi);
  Field2D f(grid.size());
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const double dx = grid.x(i) - 0.5;
      const double dy = grid.y(j) - 0.5;
      const double r = std::hypot(dx, dy);
      PrimState p = prim(1.0, 0.0, 0.0, 0.0, 1.0, b1, 0.0, 0.0);
      if (r < r0) {
        p.rho = 10.0;
        p.u = -u0 * dy / r0;
        p.v = u0 * dx / r0;
      } else if (r < r1) {
        const double taper = (r1 - r) / (r1 - r0);
        p.rho = 1.0 + 9.0 * taper;
        p.u = -taper * u0 * dy / r;
        p.v = taper * u0 * dx / r;
      }
      f[grid.index(i, j)] = prim_to_cons(p, s.gamma);
    }
  }
  return f;
}

}  // namespace mhd
