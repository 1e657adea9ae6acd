#pragma once

#include <complex>

#include "klb/errors.hpp"

namespace klb {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Hurst exponent of the fractional Brownian motion, restricted to the open
/// interval (0,1).  Validated once at construction; downstream code assumes
/// a valid value.
class Hurst {
 public:
  explicit Hurst(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// The H-derived constants entering the spectral asymptotics of the fBm and
/// its bridge.  Phases are stored divided by pi: the second-order phase of
/// the base frequencies is pi*gamma, of the bridge pi*gamma_bridge.
struct SpectralConstants {
  double ell;           ///< ell_H; sign of (H - 1/2), zero iff H = 1/2
  double gamma;         ///< gamma_H, in (-3/4, -1/2)
  double eta;           ///< eta_H
  double gamma_bridge;  ///< bridge analogue of gamma_H
  double lambda_scale;  ///< sin(pi H) * Gamma(2H + 1), > 0
};

/// Gamma function for positive real arguments.
/// Lanczos approximation (g = 7, 9 terms); relative error below 1e-13 on
/// the range used here (arguments in [0.5, 3.5]).
double gamma_function(double x);

/// modulus^exponent * exp(i * exponent * phase) -- the principal-branch
/// power of the complex number modulus * e^{i phase}, phase in (-pi, pi].
std::complex<double> principal_power(double modulus, double phase, double exponent);

SpectralConstants compute_constants(Hurst h);

}  // namespace klb
