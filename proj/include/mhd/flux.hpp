/// \file flux.hpp
/// Entropy conserving interface fluxes and the interface magnetic source.

#pragma once

#include <array>

#include "mhd/state.hpp"

namespace mhd {

/// Averaged quantities built from the parameter vectors of two states.
struct ECAverages {
  double rho_hat = 0.0;
  std::array<double, 3> vel1{};  ///< <z_{2+k}> / <z1>
  double p1 = 0.0;
  double p2 = 0.0;
  std::array<double, 3> vel2{};  ///< <z1 z_{2+k}> / <z1^2>
  std::array<double, 3> B{};     ///< <B_k>
  std::array<std::array<double, 3>, 3> BB{};  ///< <B_i B_j>; diagonal holds <B_k^2>
};

/// Per-side beta = rho / (2p) and the averages used by the kinetic energy conserving flux.
struct BetaAverages {
  double beta_L = 0.0, beta_R = 0.0;
  double beta_avg = 0.0;
  double beta_ln = 0.0;
  std::array<double, 3> beta_vel{};  ///< <beta u_k>
};

/// Interface source contribution on the induction rows. Rows 0..4 are always zero.
struct InterfaceSource {
  Vec8 s = Vec8::Zero();
  Direction direction = Direction::X;
  double jump_Bd = 0.0;
  int degenerate_rows = 0;  ///< rows where B_k does not keep a strict sign across the interface
};

ECAverages ec_averages(const PrimState& pL, const PrimState& pR, double gamma);
BetaAverages beta_averages(const PrimState& pL, const PrimState& pR);

Vec8 ec_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d);
Vec8 ekec_flux(const PrimState& pL, const PrimState& pR, double gamma, Direction d);

/// Row 5+k holds -[[B_d]] <z1 z_{2+k}><B_k> / <dx z1^2 B_k> when B_k has the same strict sign
/// on both sides and -[[B_d]] <z1 z_{2+k}> / <dx z1^2> otherwise.
InterfaceSource janhunen_interface_source(const PrimState& pL, const PrimState& pR, double dxL,
                                          double dxR, double gamma, Direction d);

/// Same source written with beta = rho/(2p): -[[B_d]] <beta u_k><B_k> / <dx beta B_k>.
InterfaceSource janhunen_interface_source_beta(const PrimState& pL, const PrimState& pR,
                                               double dxL, double dxR, double gamma, Direction d);

}  // namespace mhd
