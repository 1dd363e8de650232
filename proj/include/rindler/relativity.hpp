#ifndef RINDLER_RELATIVITY_HPP
#define RINDLER_RELATIVITY_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rindler/fock_basis.hpp"

namespace rindler {

namespace si {
inline constexpr double speed_of_light = 299792458.0;  // m/s (exact)
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double boltzmann = 1.380649e-23;      // J/K (exact)
}  // namespace si

/// natural = hbar = c = k_B = 1
enum class UnitSystem { si, natural };

/// Proper acceleration and Rindler mode frequency of the accelerated
/// observer. Everything downstream depends on them only through the
/// dimensionless ratio Omega = omega / (a/c).
struct AccelerationParams {
  double a = 0.0;      // proper acceleration, m/s^2
  double omega = 1.0;  // Rindler mode frequency, rad/s
  double c = si::speed_of_light;

  void validate() const {
    if (a < 0.0) throw std::invalid_argument("acceleration must be >= 0");
    if (omega <= 0.0) throw std::invalid_argument("mode frequency must be > 0");
    if (c <= 0.0) throw std::invalid_argument("speed of light must be > 0");
  }

  /// Omega = omega / (a/c); +infinity in the inertial limit a = 0.
  double dimensionless_frequency() const {
    validate();
    if (a == 0.0) return std::numeric_limits<double>::infinity();
    return omega / (a / c);
  }
};

/// Squeeze parameter r with its statistics tag and the Omega it came from
/// (infinity when supplied directly or at zero acceleration).
struct SqueezeParameter {
  double r = 0.0;
  Statistics statistics = Statistics::bosonic;
  double omega_dimensionless = std::numeric_limits<double>::infinity();

  /// Bypass the acceleration map and parameterize directly in r, the
  /// natural sweep variable.
  static SqueezeParameter direct(double r, Statistics statistics) {
    SqueezeParameter p{r, statistics, std::numeric_limits<double>::infinity()};
    p.validate();
    return p;
  }

  void validate() const {
    if (r < 0.0) throw std::invalid_argument("squeeze parameter must be >= 0");
    if (statistics == Statistics::fermionic && r > std::numbers::pi / 4 + 1e-12)
      throw std::invalid_argument("fermionic squeeze parameter must lie in [0, pi/4]");
  }
};

/// Bosonic squeeze parameter, tanh r = exp(-pi Omega); r = 0 at a = 0.
inline SqueezeParameter squeeze_bosonic(const AccelerationParams& params) {
  const double omega_d = params.dimensionless_frequency();
  const double r = std::isinf(omega_d) ? 0.0 : std::atanh(std::exp(-std::numbers::pi * omega_d));
  return {r, Statistics::bosonic, omega_d};
}

/// Fermionic squeeze parameter, tan r = exp(-pi Omega); ranges over
/// [0, pi/4] as the acceleration ranges over [0, infinity).
inline SqueezeParameter squeeze_fermionic(const AccelerationParams& params) {
  const double omega_d = params.dimensionless_frequency();
  const double r = std::isinf(omega_d) ? 0.0 : std::atan(std::exp(-std::numbers::pi * omega_d));
  return {r, Statistics::fermionic, omega_d};
}

/// Inverse of the squeeze maps: the Omega that produces a given r.
inline double dimensionless_frequency_from_r(double r, Statistics statistics) {
  if (r < 0.0) throw std::invalid_argument("squeeze parameter must be >= 0");
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  const double x = statistics == Statistics::bosonic ? std::tanh(r) : std::tan(r);
  return -std::log(x) / std::numbers::pi;
}

/// Davies-Unruh temperature hbar a / (2 pi c k_B), in kelvin for SI units,
/// or a / (2 pi) with hbar = c = k_B = 1.
inline double unruh_temperature(const AccelerationParams& params,
                                UnitSystem units = UnitSystem::si) {
  params.validate();
  if (units == UnitSystem::natural) return params.a / (2.0 * std::numbers::pi);
  return si::hbar * params.a / (2.0 * std::numbers::pi * params.c * si::boltzmann);
}

struct MinkowskiEvent {
  double t = 0.0;
  double z = 0.0;
};

/// Uniformly accelerated worldline (natural units, c = 1):
/// t = sinh(a tau)/a, z = cosh(a tau)/a, so z^2 - t^2 = 1/a^2.
inline MinkowskiEvent worldline(double tau, double a) {
  if (a <= 0.0) throw std::invalid_argument("worldline needs a > 0");
  return {std::sinh(a * tau) / a, std::cosh(a * tau) / a};
}

/// Rindler coordinates (eta, zeta) to Minkowski (t, z); zeta > 0 covers the
/// right wedge, zeta < 0 the left wedge.
inline MinkowskiEvent rindler_to_minkowski(double eta, double zeta) {
  return {zeta * std::sinh(eta), zeta * std::cosh(eta)};
}

}  // namespace rindler

#endif
