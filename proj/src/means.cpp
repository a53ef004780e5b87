#include "mhd/means.hpp"

#include <cmath>
#include <utility>

namespace mhd {

double log_mean(double aL, double aR) {
  if (!(aL > 0.0) || !(aR > 0.0)) {
    throw NonPositiveInput("log_mean requires positive arguments");
  }
  if (aL > aR) std::swap(aL, aR);
  const double zeta = aL / aR;
  const double f = (zeta - 1.0) / (zeta + 1.0);
  const double u = f * f;
  if (u < 1e-2) {
    const double series =
        1.0 + u * (1.0 / 3.0 +
                   u * (1.0 / 5.0 +
                        u * (1.0 / 7.0 + u * (1.0 / 9.0 + u * (1.0 / 11.0 + u * (1.0 / 13.0))))));
    return 0.5 * (aL + aR) / series;
  }
  return (aL + aR) * f / std::log(zeta);
}

}  // namespace mhd
