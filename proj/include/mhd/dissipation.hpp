/// \file dissipation.hpp
/// Eigenstructure of the Powell-augmented flux Jacobian and entropy stable fluxes.

#pragma once

#include <array>

#include "mhd/state.hpp"

namespace mhd {

struct WaveSpeeds {
  double a = 0.0;    ///< sound speed
  double c_a = 0.0;  ///< Alfven speed |b_n|
  double c_f = 0.0;  ///< fast magnetoacoustic speed
  double c_s = 0.0;  ///< slow magnetoacoustic speed
  std::array<double, 3> b{};  ///< B / sqrt(rho)
  double b_perp = 0.0;
};

/// Columns ordered (-f, -a, -s, E, D, +s, +a, +f).
struct EigenSystem {
  Vec8 lambda = Vec8::Zero();
  Mat8 Rhat = Mat8::Zero();
  Vec8 S = Vec8::Zero();
  double alpha_f = 1.0;
  double alpha_s = 0.0;
  std::array<double, 2> beta_t{};  ///< normalized tangential field components
};

WaveSpeeds wave_speeds(const PrimState& p, double gamma, Direction d);

EigenSystem eigen_system(const PrimState& p, double gamma, Direction d);

/// Arithmetic mean of two primitive states.
PrimState mean_state(const PrimState& pL, const PrimState& pR);

Vec8 es_roe_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d);
Vec8 es_llf_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d);

}  // namespace mhd
