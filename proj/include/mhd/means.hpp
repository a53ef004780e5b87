/// \file means.hpp
/// Interface averaging: jump, arithmetic mean and the logarithmic mean.

#pragma once

#include <stdexcept>

namespace mhd {

class NonPositiveInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// aR - aL
inline double jump(double aL, double aR) { return aR - aL; }

/// (aL + aR) / 2
inline double avg(double aL, double aR) { return 0.5 * (aL + aR); }

/// (aL - aR) / (ln aL - ln aR), evaluated without cancellation near aL == aR.
/// Throws NonPositiveInput unless both arguments are positive.
double log_mean(double aL, double aR);

}  // namespace mhd
