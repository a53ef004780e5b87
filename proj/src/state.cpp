#include "mhd/state.hpp"

#include <cmath>
#include <sstream>

namespace mhd {

namespace {

bool all_finite(const Vec8& q) { return q.allFinite(); }

}  // namespace

ConsState prim_to_cons(const PrimState& p, double gamma) {
  ConsState c;
  c.q << p.rho, p.rho * p.u, p.rho * p.v, p.rho * p.w,
      p.p / (gamma - 1.0) + 0.5 * p.rho * p.vel_sq() + 0.5 * p.mag_sq(), p.B1, p.B2, p.B3;
  return c;
}

PrimState cons_to_prim(const ConsState& c, double gamma) {
  if (!all_finite(c.q)) {
    throw StateError(StateErrorKind::NonFinite, "non-finite conserved state");
  }
  const double rho = c.q[0];
  if (!(rho > kValidityFloor)) {
    std::ostringstream os;
    os << "non-positive density rho=" << rho;
    throw StateError(StateErrorKind::NonPositiveDensity, os.str());
  }
  PrimState p;
  p.rho = rho;
  p.u = c.q[1] / rho;
  p.v = c.q[2] / rho;
  p.w = c.q[3] / rho;
  p.B1 = c.q[5];
  p.B2 = c.q[6];
  p.B3 = c.q[7];
  p.p = (gamma - 1.0) * (c.q[4] - 0.5 * rho * p.vel_sq() - 0.5 * p.mag_sq());
  if (!(p.p > kValidityFloor)) {
    std::ostringstream os;
    os << "non-positive pressure p=" << p.p;
    throw StateError(StateErrorKind::NonPositivePressure, os.str());
  }
  return p;
}

const PrimState& validate(const PrimState& p) {
  const Vec8 v = (Vec8() << p.rho, p.u, p.v, p.w, p.p, p.B1, p.B2, p.B3).finished();
  if (!all_finite(v)) throw StateError(StateErrorKind::NonFinite, "non-finite primitive state");
  if (!(p.rho > kValidityFloor))
    throw StateError(StateErrorKind::NonPositiveDensity, "non-positive density");
  if (!(p.p > kValidityFloor))
    throw StateError(StateErrorKind::NonPositivePressure, "non-positive pressure");
  return p;
}

Vec8 entropy_vars(const PrimState& p, double gamma) {
  const double s = std::log(p.p) - gamma * std::log(p.rho);
  const double r_p = p.rho / p.p;
  Vec8 v;
  v << (gamma - s) / (gamma - 1.0) - 0.5 * r_p * p.vel_sq(), r_p * p.u, r_p * p.v, r_p * p.w,
      -r_p, r_p * p.B1, r_p * p.B2, r_p * p.B3;
  return v;
}

Vec8 entropy_vars(const ConsState& q, double gamma) {
  return entropy_vars(cons_to_prim(q, gamma), gamma);
}

EntropyQuantities entropy_quantities(const PrimState& p, double gamma) {
  EntropyQuantities e;
  e.s = std::log(p.p) - gamma * std::log(p.rho);
  e.U = -p.rho * e.s / (gamma - 1.0);
  const double bb = p.mag_sq();
  const double ub = p.u_dot_b();
  for (int d = 0; d < 3; ++d) {
    const double ud = p.vel(d);
    e.flux[d] = ud * e.U;
    e.potential[d] = p.rho * ud + p.rho * ud * bb / (2.0 * p.p) - p.rho * p.mag(d) * ub / p.p;
  }
  return e;
}

EntropyQuantities entropy_quantities(const ConsState& q, double gamma) {
  return entropy_quantities(cons_to_prim(q, gamma), gamma);
}

Mat8 entropy_jacobian(const PrimState& p, double gamma) {
  const double rho = p.rho;
  const double a2 = gamma * p.p / rho;
  const double bb = p.mag_sq();
  const double rho_e = p.p / (gamma - 1.0) + 0.5 * rho * p.vel_sq() + 0.5 * bb;
  const double H = a2 / (gamma - 1.0) + 0.5 * p.vel_sq();
  const std::array<double, 3> vel{p.u, p.v, p.w};
  const std::array<double, 3> B{p.B1, p.B2, p.B3};

  Mat8 m = Mat8::Zero();
  m(0, 0) = rho;
  m(0, 4) = m(4, 0) = rho_e - 0.5 * bb;
  for (int i = 0; i < 3; ++i) {
    m(0, 1 + i) = m(1 + i, 0) = rho * vel[i];
    for (int j = i; j < 3; ++j) {
      m(1 + i, 1 + j) = m(1 + j, 1 + i) = rho * vel[i] * vel[j] + (i == j ? p.p : 0.0);
    }
    m(1 + i, 4) = m(4, 1 + i) = rho * H * vel[i];
    m(4, 5 + i) = m(5 + i, 4) = p.p * B[i] / rho;
    m(5 + i, 5 + i) = p.p / rho;
  }
  m(4, 4) = rho * H * H - a2 * p.p / (gamma - 1.0) + a2 * bb / gamma;
  return m;
}

Vec8 physical_flux(const PrimState& p, double gamma, Direction d) {
  const int n = frame(d).n;
  const double un = p.vel(n);
  const double Bn = p.mag(n);
  const double bb = p.mag_sq();
  const double ptot = p.p + 0.5 * bb;
  const double rho_e = p.p / (gamma - 1.0) + 0.5 * p.rho * p.vel_sq() + 0.5 * bb;

  Vec8 f;
  f[0] = p.rho * un;
  for (int k = 0; k < 3; ++k) {
    f[1 + k] = p.rho * un * p.vel(k) - Bn * p.mag(k);
  }
  f[1 + n] += ptot;
  f[4] = un * (rho_e + ptot) - Bn * p.u_dot_b();
  for (int k = 0; k < 3; ++k) {
    f[5 + k] = un * p.mag(k) - p.vel(k) * Bn;
  }
  f[5 + n] = 0.0;
  return f;
}

ParamVector param_vector(const PrimState& p) {
  const double z1 = std::sqrt(p.rho / p.p);
  return ParamVector{{z1, z1 * p.u, z1 * p.v, z1 * p.w, std::sqrt(p.rho * p.p), p.B1, p.B2, p.B3}};
}

}  // namespace mhd
