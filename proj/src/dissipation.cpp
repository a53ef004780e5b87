#include "mhd/dissipation.hpp"

#include <algorithm>
#include <cmath>

#include "mhd/flux.hpp"

namespace mhd {

namespace {

constexpr double kAlphaFloor = 1e-14;
constexpr double kPerpRel = 1e-12;

}  // namespace

WaveSpeeds wave_speeds(const PrimState& p, double gamma, Direction d) {
  const auto [n, t1, t2] = frame(d);
  WaveSpeeds w;
  const double a2 = gamma * p.p / p.rho;
  w.a = std::sqrt(a2);
  const double sr = std::sqrt(p.rho);
  for (int k = 0; k < 3; ++k) w.b[k] = p.mag(k) / sr;
  const double b2 = w.b[0] * w.b[0] + w.b[1] * w.b[1] + w.b[2] * w.b[2];
  const double bn = w.b[n];
  w.b_perp = std::hypot(w.b[t1], w.b[t2]);
  w.c_a = std::abs(bn);
  const double root = std::sqrt(std::max(0.0, (a2 + b2) * (a2 + b2) - 4.0 * a2 * bn * bn));
  w.c_f = std::sqrt(0.5 * (a2 + b2) + 0.5 * root);
  w.c_s = w.a * w.c_a / w.c_f;
  return w;
}

EigenSystem eigen_system(const PrimState& p, double gamma, Direction d) {
  const auto [n, t1, t2] = frame(d);
  const WaveSpeeds w = wave_speeds(p, gamma, d);
  const double rho = p.rho;
  const double sr = std::sqrt(rho);
  const double r32 = rho * sr;
  const double a = w.a;
  const double a2 = a * a;
  const double cf = w.c_f;
  const double cs = w.c_s;
  const double bn = w.b[n];
  const double un = p.vel(n);
  const double ut1 = p.vel(t1);
  const double ut2 = p.vel(t2);
  const double uu = p.vel_sq();

  EigenSystem es;
  const double den = std::max(cf * cf - cs * cs, kAlphaFloor);
  double af = std::sqrt(std::max(0.0, a2 - cs * cs) / den);
  double as = std::sqrt(std::max(0.0, cf * cf - a2) / den);
  const double norm = std::hypot(af, as);
  if (norm > 0.0) {
    af /= norm;
    as /= norm;
  } else {
    af = as = M_SQRT1_2;
  }
  es.alpha_f = af;
  es.alpha_s = as;

  const double bmag = std::sqrt(p.mag_sq()) / sr;
  double be1 = M_SQRT1_2, be2 = M_SQRT1_2;
  if (w.b_perp > 0.0 && !(w.b_perp < kPerpRel * bmag)) {
    be1 = w.b[t1] / w.b_perp;
    be2 = w.b[t2] / w.b_perp;
  }
  es.beta_t = {be1, be2};
  const double sg = bn >= 0.0 ? 1.0 : -1.0;
  const double ub = ut1 * be1 + ut2 * be2;

  auto set_col = [&](int c, double r0, double mn, double mt1, double mt2, double e, double Bn,
                     double Bt1, double Bt2) {
    es.Rhat(0, c) = r0;
    es.Rhat(1 + n, c) = mn;
    es.Rhat(1 + t1, c) = mt1;
    es.Rhat(1 + t2, c) = mt2;
    es.Rhat(4, c) = e;
    es.Rhat(5 + n, c) = Bn;
    es.Rhat(5 + t1, c) = Bt1;
    es.Rhat(5 + t2, c) = Bt2;
  };

  for (const auto& [c, sgn] : {std::pair{0, -1.0}, std::pair{7, 1.0}}) {
    const double psi = 0.5 * af * rho * uu + a * as * rho * w.b_perp + af * rho * a2 / (gamma - 1.0) +
                       sgn * af * cf * rho * un - sgn * as * cs * rho * sg * ub;
    set_col(c, af * rho, rho * af * (un + sgn * cf), rho * (af * ut1 - sgn * as * cs * be1 * sg),
            rho * (af * ut2 - sgn * as * cs * be2 * sg), psi, 0.0, as * a * be1 * sr,
            as * a * be2 * sr);
    es.lambda[c] = un + sgn * cf;
  }
  for (const auto& [c, sgn] : {std::pair{2, -1.0}, std::pair{5, 1.0}}) {
    const double psi = 0.5 * as * rho * uu - a * af * rho * w.b_perp + as * rho * a2 / (gamma - 1.0) +
                       sgn * as * cs * rho * un + sgn * af * cf * rho * sg * ub;
    set_col(c, as * rho, rho * as * (un + sgn * cs), rho * (as * ut1 + sgn * af * cf * be1 * sg),
            rho * (as * ut2 + sgn * af * cf * be2 * sg), psi, 0.0, -af * a * be1 * sr,
            -af * a * be2 * sr);
    es.lambda[c] = un + sgn * cs;
  }
  for (const auto& [c, sgn] : {std::pair{1, -1.0}, std::pair{6, 1.0}}) {
    set_col(c, 0.0, 0.0, sg * sgn * r32 * be2, -sg * sgn * r32 * be1,
            -sg * sgn * r32 * (be1 * ut2 - be2 * ut1), 0.0, -rho * be2, rho * be1);
    es.lambda[c] = un + sgn * w.c_a;
  }
  set_col(3, 1.0, un, ut1, ut2, 0.5 * uu, 0.0, 0.0, 0.0);
  es.lambda[3] = un;
  set_col(4, 0.0, 0.0, 0.0, 0.0, sr * bn, 1.0, 0.0, 0.0);
  es.lambda[4] = un;

  const double s_mag = 1.0 / (2.0 * rho * gamma);
  const double s_alf = p.p / (2.0 * rho * rho * rho);
  es.S << s_mag, s_alf, s_mag, rho * (gamma - 1.0) / gamma, p.p / rho, s_mag, s_alf, s_mag;
  return es;
}

PrimState mean_state(const PrimState& pL, const PrimState& pR) {
  PrimState m;
  m.rho = 0.5 * (pL.rho + pR.rho);
  m.u = 0.5 * (pL.u + pR.u);
  m.v = 0.5 * (pL.v + pR.v);
  m.w = 0.5 * (pL.w + pR.w);
  m.p = 0.5 * (pL.p + pR.p);
  m.B1 = 0.5 * (pL.B1 + pR.B1);
  m.B2 = 0.5 * (pL.B2 + pR.B2);
  m.B3 = 0.5 * (pL.B3 + pR.B3);
  return m;
}

Vec8 es_roe_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d) {
  const Vec8 dv = entropy_vars(pR, gamma) - entropy_vars(pL, gamma);
  const EigenSystem es = eigen_system(mean_state(pL, pR), gamma, d);
  const Vec8 proj = es.Rhat.transpose() * dv;
  const Vec8 scaled = es.lambda.cwiseAbs().cwiseProduct(es.S).cwiseProduct(proj);
  return ec_flux(pL, pR, gamma, d) - 0.5 * (es.Rhat * scaled);
}

Vec8 es_llf_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d) {
  const Vec8 dv = entropy_vars(pR, gamma) - entropy_vars(pL, gamma);
  const PrimState m = mean_state(pL, pR);
  const double lambda_max = std::abs(m.vel(frame(d).n)) + wave_speeds(m, gamma, d).c_f;
  return ec_flux(pL, pR, gamma, d) - 0.5 * lambda_max * (entropy_jacobian(m, gamma) * dv);
}

}  // namespace mhd
