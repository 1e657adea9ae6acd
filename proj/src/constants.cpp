#include "klb/constants.hpp"

#include <cmath>
#include <string>

namespace klb {

Hurst::Hurst(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw DomainError("Hurst exponent must lie in the open interval (0,1), got " +
                      std::to_string(value));
  }
}

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
  // accurate for x >= 0.5
  const double z = x - 1.0;
  double series = kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) series += kLanczosCoef[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma_function(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma_function: argument must be positive, got " + std::to_string(x));
  }
  if (x < 0.5) {
    // reflection keeps the Lanczos series inside its accurate range
    return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

std::complex<double> principal_power(double modulus, double phase, double exponent) {
  if (!(modulus > 0.0)) {
    throw DomainError("principal_power: modulus must be positive");
  }
  if (!(phase > -kPi && phase <= kPi)) {
    throw DomainError("principal_power: phase must lie in (-pi, pi]");
  }
  return std::polar(std::pow(modulus, exponent), exponent * phase);
}

SpectralConstants compute_constants(Hurst h) {
  const double H = h.value();
  const double ell =
      std::sin(0.5 * kPi * (H - 0.5) / (H + 0.5)) / std::sin(0.5 * kPi / (H + 0.5));
  // arcsin(ell / sqrt(1 + ell^2)) == atan(ell), better conditioned near ell = 0
  const double phase = std::atan(ell);

  SpectralConstants c;
  c.ell = ell;
  c.gamma = -0.5 + 0.25 * (1.0 - 2.0 * H) + phase / kPi;
  c.eta = 0.125 * (2.0 * H - 1.0) - phase / kPi;
  c.gamma_bridge = 0.25 * (1.0 - 2.0 * H) + 2.0 * phase / kPi;
  c.lambda_scale = std::sin(kPi * H) * gamma_function(2.0 * H + 1.0);
  return c;
}

}  // namespace klb
