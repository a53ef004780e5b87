/// \file state.hpp
/// Ideal MHD state representations, conversions, and pointwise entropy quantities.
///
/// Conserved ordering everywhere: [rho, rho*u, rho*v, rho*w, rho*e, B1, B2, B3].

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mhd {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Minimum magnitude of rho and p for a state to count as valid.
inline constexpr double kValidityFloor = 1e-14;

enum class Direction { X = 0, Y = 1, Z = 2 };

/// Component indices (0-based) of the normal and the two tangential directions,
/// taken as a cyclic permutation of (x, y, z).
struct Frame {
  int n, t1, t2;
};

constexpr Frame frame(Direction d) {
  switch (d) {
    case Direction::Y: return {1, 2, 0};
    case Direction::Z: return {2, 0, 1};
    default: return {0, 1, 2};
  }
}

struct PrimState {
  double rho = 1.0;
  double u = 0.0, v = 0.0, w = 0.0;
  double p = 1.0;
  double B1 = 0.0, B2 = 0.0, B3 = 0.0;

  double vel(int i) const { return i == 0 ? u : (i == 1 ? v : w); }
  double mag(int i) const { return i == 0 ? B1 : (i == 1 ? B2 : B3); }
  double vel_sq() const { return u * u + v * v + w * w; }
  double mag_sq() const { return B1 * B1 + B2 * B2 + B3 * B3; }
  double u_dot_b() const { return u * B1 + v * B2 + w * B3; }
};

struct ConsState {
  Vec8 q = Vec8::Zero();

  double rho() const { return q[0]; }
  double mom(int i) const { return q[1 + i]; }
  double energy() const { return q[4]; }
  double mag(int i) const { return q[5 + i]; }
};

struct EntropyQuantities {
  double s = 0.0;  ///< physical entropy ln(p) - gamma ln(rho)
  double U = 0.0;  ///< mathematical entropy -rho s / (gamma - 1)
  std::array<double, 3> flux{};       ///< u U, v U, w U
  std::array<double, 3> potential{};  ///< phi_x, phi_y, phi_z
};

/// Parameter vector z = [sqrt(rho/p), sqrt(rho/p) u, .., sqrt(rho p), B1, B2, B3].
struct ParamVector {
  std::array<double, 8> z{};
  double operator[](int i) const { return z[i]; }
};

enum class StateErrorKind { NonPositiveDensity, NonPositivePressure, NonFinite };

class StateError : public std::runtime_error {
 public:
  StateError(StateErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  StateErrorKind kind() const { return kind_; }

 private:
  StateErrorKind kind_;
};

ConsState prim_to_cons(const PrimState& p, double gamma);

/// Throws StateError when rho or p falls below kValidityFloor or the state is not finite.
PrimState cons_to_prim(const ConsState& q, double gamma);

/// Throws StateError on an invalid primitive state; returns it unchanged otherwise.
const PrimState& validate(const PrimState& p);

Vec8 entropy_vars(const PrimState& p, double gamma);
Vec8 entropy_vars(const ConsState& q, double gamma);

EntropyQuantities entropy_quantities(const PrimState& p, double gamma);
EntropyQuantities entropy_quantities(const ConsState& q, double gamma);

/// Symmetric positive definite Jacobian dq/dv laid out entry by entry.
Mat8 entropy_jacobian(const PrimState& p, double gamma);

Vec8 physical_flux(const PrimState& p, double gamma, Direction d);

ParamVector param_vector(const PrimState& p);

}  // namespace mhd
