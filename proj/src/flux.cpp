#include "mhd/flux.hpp"

#include <cmath>
#include <limits>

#include "mhd/means.hpp"

namespace mhd {

namespace {

template <class NumFn, class WeightFn>
InterfaceSource build_source(const PrimState& pL, const PrimState& pR, double dxL, double dxR,
                             Direction d, NumFn numerator, WeightFn weight) {
  InterfaceSource src;
  src.direction = d;
  const int n = frame(d).n;
  src.jump_Bd = jump(pL.mag(n), pR.mag(n));
  if (src.jump_Bd == 0.0) return src;
  const double wL = dxL * weight(pL);
  const double wR = dxR * weight(pR);
  for (int k = 0; k < 3; ++k) {
    const double bL = pL.mag(k);
    const double bR = pR.mag(k);
    const double den = avg(wL * bL, wR * bR);
    if (bL * bR > 0.0 && std::abs(den) >= std::numeric_limits<double>::min()) {
      src.s[5 + k] = -src.jump_Bd * numerator(k) * avg(bL, bR) / den;
    } else {
      ++src.degenerate_rows;
      src.s[5 + k] = -src.jump_Bd * numerator(k) / avg(wL, wR);
    }
  }
  return src;
}

}  // namespace

ECAverages ec_averages(const PrimState& pL, const PrimState& pR, double gamma) {
  const ParamVector zL = param_vector(pL);
  const ParamVector zR = param_vector(pR);
  const double z1_avg = avg(zL[0], zR[0]);
  const double z5_avg = avg(zL[4], zR[4]);
  const double z1_ln = log_mean(zL[0], zR[0]);
  const double z5_ln = log_mean(zL[4], zR[4]);
  const double z1_sq_avg = avg(zL[0] * zL[0], zR[0] * zR[0]);

  ECAverages a;
  a.rho_hat = z1_avg * z5_ln;
  a.p1 = z5_avg / z1_avg;
  for (int k = 0; k < 3; ++k) {
    a.vel1[k] = avg(zL[1 + k], zR[1 + k]) / z1_avg;
    a.vel2[k] = avg(zL[0] * zL[1 + k], zR[0] * zR[1 + k]) / z1_sq_avg;
    a.B[k] = avg(zL[5 + k], zR[5 + k]);
    for (int j = 0; j < 3; ++j) {
      a.BB[k][j] = avg(zL[5 + k] * zL[5 + j], zR[5 + k] * zR[5 + j]);
    }
  }
  a.p2 = (gamma + 1.0) / (2.0 * gamma) * z5_ln / z1_ln + (gamma - 1.0) / (2.0 * gamma) * a.p1;
  return a;
}

BetaAverages beta_averages(const PrimState& pL, const PrimState& pR) {
  BetaAverages b;
  b.beta_L = pL.rho / (2.0 * pL.p);
  b.beta_R = pR.rho / (2.0 * pR.p);
  b.beta_avg = avg(b.beta_L, b.beta_R);
  b.beta_ln = log_mean(b.beta_L, b.beta_R);
  for (int k = 0; k < 3; ++k) {
    b.beta_vel[k] = avg(b.beta_L * pL.vel(k), b.beta_R * pR.vel(k));
  }
  return b;
}

Vec8 ec_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d) {
  const auto [n, t1, t2] = frame(d);
  const ECAverages a = ec_averages(pL, pR, gamma);
  const double un = a.vel1[n];
  const double mass = a.rho_hat * un;
  const double ring_sum = a.BB[0][0] + a.BB[1][1] + a.BB[2][2];
  const double vel1_sq = a.vel1[0] * a.vel1[0] + a.vel1[1] * a.vel1[1] + a.vel1[2] * a.vel1[2];

  Vec8 f;
  f[0] = mass;
  f[1 + n] = a.p1 + mass * un + 0.5 * ring_sum - a.BB[n][n];
  f[1 + t1] = mass * a.vel1[t1] - a.BB[n][t1];
  f[1 + t2] = mass * a.vel1[t2] - a.BB[n][t2];
  f[4] = gamma * un * a.p2 / (gamma - 1.0) + 0.5 * mass * vel1_sq +
         a.vel2[n] * (a.B[t1] * a.B[t1] + a.B[t2] * a.B[t2]) -
         a.B[n] * (a.vel2[t1] * a.B[t1] + a.vel2[t2] * a.B[t2]);
  f[5 + n] = 0.0;
  f[5 + t1] = a.vel2[n] * a.B[t1] - a.vel2[t1] * a.B[n];
  f[5 + t2] = a.vel2[n] * a.B[t2] - a.vel2[t2] * a.B[n];
  return f;
}

Vec8 ekec_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d) {
  const auto [n, t1, t2] = frame(d);
  const BetaAverages b = beta_averages(pL, pR);
  const double rho_ln = log_mean(pL.rho, pR.rho);
  const double rho_avg = avg(pL.rho, pR.rho);
  std::array<double, 3> vel{}, vel_sq{}, mag{}, mag_sq{};
  for (int k = 0; k < 3; ++k) {
    vel[k] = avg(pL.vel(k), pR.vel(k));
    vel_sq[k] = avg(pL.vel(k) * pL.vel(k), pR.vel(k) * pR.vel(k));
    mag[k] = avg(pL.mag(k), pR.mag(k));
    mag_sq[k] = avg(pL.mag(k) * pL.mag(k), pR.mag(k) * pR.mag(k));
  }
  auto mag_prod = [&](int i, int j) { return avg(pL.mag(i) * pL.mag(j), pR.mag(i) * pR.mag(j)); };
  const double mass = rho_ln * vel[n];
  const double p_tilde = rho_avg / (2.0 * b.beta_avg);

  Vec8 f;
  f[0] = mass;
  f[1 + n] = mass * vel[n] + p_tilde + 0.5 * (mag_sq[0] + mag_sq[1] + mag_sq[2]) - mag_sq[n];
  f[1 + t1] = mass * vel[t1] - mag_prod(n, t1);
  f[1 + t2] = mass * vel[t2] - mag_prod(n, t2);
  f[5 + n] = 0.0;
  f[5 + t1] = (b.beta_vel[n] * mag[t1] - b.beta_vel[t1] * mag[n]) / b.beta_avg;
  f[5 + t2] = (b.beta_vel[n] * mag[t2] - b.beta_vel[t2] * mag[n]) / b.beta_avg;
  f[4] = mass / (2.0 * (gamma - 1.0) * b.beta_ln) + p_tilde * vel[n] -
         0.5 * mass * (vel_sq[0] + vel_sq[1] + vel_sq[2]) +
         mass * (vel[0] * vel[0] + vel[1] * vel[1] + vel[2] * vel[2]) + mag[t1] * f[5 + t1] +
         mag[t2] * f[5 + t2];
  return f;
}

InterfaceSource janhunen_interface_source(const PrimState& pL, const PrimState& pR, double dxL,
                                          double dxR, double /*gamma*/, Direction d) {
  const ParamVector zL = param_vector(pL);
  const ParamVector zR = param_vector(pR);
  return build_source(
      pL, pR, dxL, dxR, d,
      [&](int k) { return avg(zL[0] * zL[1 + k], zR[0] * zR[1 + k]); },
      [](const PrimState& s) { return s.rho / s.p; });
}

InterfaceSource janhunen_interface_source_beta(const PrimState& pL, const PrimState& pR,
                                               double dxL, double dxR, double /*gamma*/,
                                               Direction d) {
  const BetaAverages b = beta_averages(pL, pR);
  return build_source(
      pL, pR, dxL, dxR, d, [&](int k) { return b.beta_vel[k]; },
      [](const PrimState& s) { return s.rho / (2.0 * s.p); });
}

}  // namespace mhd
