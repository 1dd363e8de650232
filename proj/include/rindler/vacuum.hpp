#ifndef RINDLER_VACUUM_HPP
#define RINDLER_VACUUM_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rindler/fock.hpp"

namespace rindler {

/// One correlated (region I, region II) mode pair. The inertial vacuum of a
/// single cavity mode expands over exactly one such pair.
struct ModePair {
  ModeLabel region_I;
  ModeLabel region_II;
  Statistics statistics = Statistics::bosonic;

  void validate() const {
    if (region_I.name == region_II.name)
      throw std::invalid_argument("mode pair labels must be distinct");
    if (region_I.statistics != statistics || region_II.statistics != statistics)
      throw std::invalid_argument("mode pair statistics tag mismatch");
  }

  static ModePair bosonic(const std::string& base) {
    return {{base + "_I", Statistics::bosonic}, {base + "_II", Statistics::bosonic},
            Statistics::bosonic};
  }
  static ModePair fermionic(const std::string& base) {
    return {{base + "_I", Statistics::fermionic}, {base + "_II", Statistics::fermionic},
            Statistics::fermionic};
  }
};

namespace detail {
template <typename Scalar>
void check_bosonic_r(Scalar r) {
  if (r < Scalar(0)) throw std::invalid_argument("squeeze parameter must be >= 0");
}
template <typename Scalar>
void check_fermionic_r(Scalar r) {
  if (r < Scalar(0) || r > Scalar(std::numbers::pi / 4) + Scalar(1e-12))
    throw std::invalid_argument("fermionic squeeze parameter must lie in [0, pi/4]");
}
}  // namespace detail

/// Inertial vacuum of one bosonic mode as seen across the horizon: the
/// two-mode squeezed state (1/cosh r) sum_n tanh^n r |n>_I |n>_II, truncated
/// at n_max with geometric norm deficit xi^(n_max+1), xi = tanh^2 r.
template <typename Scalar>
StateVectorT<Scalar> bosonic_vacuum(Scalar r, const ModePair& pair, int n_max) {
  detail::check_bosonic_r(r);
  pair.validate();
  if (pair.statistics != Statistics::bosonic)
    throw std::invalid_argument("bosonic_vacuum needs a bosonic mode pair");
  StateVectorT<Scalar> state({pair.region_I, pair.region_II}, n_max);
  const Scalar t = std::tanh(r), sech = Scalar(1) / std::cosh(r);
  Scalar amp = sech;
  for (int n = 0; n <= n_max; ++n, amp *= t)
    state.set_amplitude(FockBasisState{n, n}, amp);
  state.set_truncation_deficit(std::pow(t * t, Scalar(n_max + 1)));
  return state;
}

/// One-particle inertial state over the same pair:
/// (1/cosh^2 r) sum_n tanh^n r sqrt(n+1) |n+1>_I |n>_II. Equal to the
/// transformed creation operator cosh r b_I^dag - sinh r b_II acting on the
/// two-mode squeezed vacuum.
template <typename Scalar>
StateVectorT<Scalar> bosonic_one_particle(Scalar r, const ModePair& pair, int n_max) {
  detail::check_bosonic_r(r);
  pair.validate();
  if (pair.statistics != Statistics::bosonic)
    throw std::invalid_argument("bosonic_one_particle needs a bosonic mode pair");
  StateVectorT<Scalar> state({pair.region_I, pair.region_II}, n_max);
  const Scalar t = std::tanh(r), sech2 = Scalar(1) / (std::cosh(r) * std::cosh(r));
  Scalar norm2 = 0;
  Scalar amp = sech2;
  for (int n = 0; n + 1 <= n_max; ++n, amp *= t) {
    const Scalar value = amp * std::sqrt(Scalar(n + 1));
    state.set_amplitude(FockBasisState{n + 1, n}, value);
    norm2 += value * value;
  }
  state.set_truncation_deficit(Scalar(1) - norm2);
  return state;
}

/// Fermionic inertial vacuum cos r |00> + sin r |11>; exactly normalized.
template <typename Scalar>
StateVectorT<Scalar> fermionic_vacuum(Scalar r, const ModePair& pair) {
  detail::check_fermionic_r(r);
  pair.validate();
  if (pair.statistics != Statistics::fermionic)
    throw std::invalid_argument("fermionic_vacuum needs a fermionic mode pair");
  StateVectorT<Scalar> state({pair.region_I, pair.region_II}, 1);
  state.set_amplitude(FockBasisState{0, 0}, std::cos(r));
  state.set_amplitude(FockBasisState{1, 1}, std::sin(r));
  return state;
}

/// Fermionic one-particle state |1>_I |0>_II, independent of r.
template <typename Scalar>
StateVectorT<Scalar> fermionic_one_particle(Scalar r, const ModePair& pair) {
  detail::check_fermionic_r(r);
  pair.validate();
  if (pair.statistics != Statistics::fermionic)
    throw std::invalid_argument("fermionic_one_particle needs a fermionic mode pair");
  StateVectorT<Scalar> state({pair.region_I, pair.region_II}, 1);
  state.set_amplitude(FockBasisState{1, 0}, Scalar(1));
  return state;
}

/// Region-I reduction of the bosonic vacuum: the thermal diagonal
/// (1 - xi) xi^n with xi = tanh^2 r = exp(-2 pi Omega).
template <typename Scalar>
DensityOperatorT<Scalar> thermal_reduction_bosonic(
    Scalar r, int n_max, const ModeLabel& mode = {"R1_I", Statistics::bosonic}) {
  detail::check_bosonic_r(r);
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  const Scalar xi = std::tanh(r) * std::tanh(r);
  std::vector<FockBasisState> basis;
  Matrix m = Matrix::Zero(n_max + 1, n_max + 1);
  Scalar weight = Scalar(1) - xi;
  for (int n = 0; n <= n_max; ++n, weight *= xi) {
    basis.push_back(FockBasisState{n});
    m(n, n) = weight;
  }
  return DensityOperatorT<Scalar>({mode}, std::move(basis), std::move(m),
                                  std::pow(xi, Scalar(n_max + 1)));
}

/// Region-I reduction of the fermionic vacuum: diag(cos^2 r, sin^2 r).
template <typename Scalar>
DensityOperatorT<Scalar> thermal_reduction_fermionic(
    Scalar r, const ModeLabel& mode = {"R1_I", Statistics::fermionic}) {
  detail::check_fermionic_r(r);
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  Matrix m = Matrix::Zero(2, 2);
  const Scalar c = std::cos(r), s = std::sin(r);
  m(0, 0) = c * c;
  m(1, 1) = s * s;
  return DensityOperatorT<Scalar>({mode}, {FockBasisState{0}, FockBasisState{1}}, std::move(m));
}

}  // namespace rindler

#endif
