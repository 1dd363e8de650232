#ifndef RINDLER_PDC_HPP
#define RINDLER_PDC_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "rindler/fock.hpp"
#include "rindler/relativity.hpp"

namespace rindler {

/// Coefficients of the two-mode Bogoliubov transformation
///   b_S     = S11 a_S + S12 a_I^dag
///   b_I^dag = S21 a_S + S22 a_I^dag
/// relating input (pump-side) and output (crystal-side) mode operators.
template <typename Scalar>
struct SqueezeMatrixT {
  using Complex = std::complex<Scalar>;

  Complex s11{1}, s12{0}, s21{0}, s22{1};

  static SqueezeMatrixT identity() { return {}; }

  /// Squeezing form S11 = S22 = cosh r, S12 = e^{i phi} sinh r,
  /// S21 = e^{-i phi} sinh r. The conjugate phase on S21 is what the
  /// commutator constraints require once phi != 0 (mod pi).
  static SqueezeMatrixT squeezing(Scalar r, Scalar phi = 0) {
    if (r < Scalar(0)) throw std::invalid_argument("negative squeeze parameter");
    const Complex phase = std::polar(Scalar(1), phi);
    return {Complex(std::cosh(r)), phase * std::sinh(r),
            std::conj(phase) * std::sinh(r), Complex(std::cosh(r))};
  }

  Eigen::Matrix<Complex, 2, 2> coefficient_matrix() const {
    Eigen::Matrix<Complex, 2, 2> m;
    m << s11, s12, s21, s22;
    return m;
  }
};

using SqueezeMatrix = SqueezeMatrixT<double>;

/// Residuals of the canonical commutator constraints
/// |S11|^2 - |S12|^2 = 1, |S22|^2 - |S21|^2 = 1, S11 S21* = S12 S22*.
template <typename Scalar>
struct BogoliubovResidualsT {
  Scalar signal_normalization = 0;
  Scalar idler_normalization = 0;
  Scalar cross_commutator = 0;

  Scalar max() const {
    return std::max({signal_normalization, idler_normalization, cross_commutator});
  }
  bool valid(Scalar tolerance = Scalar(1e-12)) const { return max() < tolerance; }
};

using BogoliubovResiduals = BogoliubovResidualsT<double>;

template <typename Scalar>
BogoliubovResidualsT<Scalar> validate_bogoliubov(const SqueezeMatrixT<Scalar>& s) {
  return {std::abs(std::norm(s.s11) - std::norm(s.s12) - Scalar(1)),
          std::abs(std::norm(s.s22) - std::norm(s.s21) - Scalar(1)),
          std::abs(s.s11 * std::conj(s.s21) - s.s12 * std::conj(s.s22))};
}

template <typename Scalar>
void require_valid(const SqueezeMatrixT<Scalar>& s) {
  if (!validate_bogoliubov(s).valid())
    throw std::invalid_argument("squeeze matrix violates the commutator constraints");
}

/// Input operators in terms of output operators:
///   a_S     =  S11* b_S - S21* b_I^dag
///   a_I^dag = -S12* b_S + S22* b_I^dag.
/// Composing with the forward map gives the identity on coefficient vectors.
template <typename Scalar>
SqueezeMatrixT<Scalar> invert_bogoliubov(const SqueezeMatrixT<Scalar>& s) {
  require_valid(s);
  return {std::conj(s.s11), -std::conj(s.s21), -std::conj(s.s12), std::conj(s.s22)};
}

/// Input vacuum expanded over output-mode Fock states: pair amplitudes
/// A_n = A_0 (S21*/S11*)^n on |n>_S |n>_I with |A_0| = 1/|S11|, from the
/// recursion A_{n+1} = (S21*/S11*) A_n. For the squeezing form this is the
/// two-mode squeezed vacuum (1/cosh r) sum tanh^n r |n, n>.
template <typename Scalar>
StateVectorT<Scalar> pdc_vacuum(const SqueezeMatrixT<Scalar>& s, int n_max,
                                const ModeLabel& signal = {"signal", Statistics::bosonic},
                                const ModeLabel& idler = {"idler", Statistics::bosonic}) {
  using Complex = std::complex<Scalar>;
  require_valid(s);
  if (std::abs(s.s21) >= std::abs(s.s11))
    throw std::invalid_argument("pdc_vacuum: |S21| >= |S11| gives a non-normalizable state");
  StateVectorT<Scalar> state({signal, idler}, n_max);
  const Complex ratio = std::conj(s.s21) / std::conj(s.s11);
  Complex amp = Complex(Scalar(1) / std::abs(s.s11));
  for (int n = 0; n <= n_max; ++n, amp *= ratio)
    state.set_amplitude(FockBasisState{n, n}, amp);
  state.set_truncation_deficit(std::pow(std::norm(ratio), Scalar(n_max + 1)));
  return state;
}

/// Expectation of N_first - N_second on a two-mode state (normalized by the
/// state's squared norm). Zero for any pair-produced vacuum.
template <typename Scalar>
Scalar photon_number_difference(const StateVectorT<Scalar>& state) {
  if (state.modes().size() != 2)
    throw std::invalid_argument("photon_number_difference expects a two-mode state");
  Scalar weighted = 0, norm2 = 0;
  for (const auto& [basis, amp] : state.amplitudes()) {
    const Scalar p = std::norm(amp);
    weighted += p * Scalar(basis.occupations[0] - basis.occupations[1]);
    norm2 += p;
  }
  if (norm2 <= Scalar(0)) throw std::domain_error("photon_number_difference: zero state");
  return weighted / norm2;
}

/// State of the observed idler mode once the signal is unobserved: the
/// geometric diagonal (1 - q) q^n with q = |S21/S11|^2. Equals the
/// fock partial-trace route over pdc_vacuum.
template <typename Scalar>
DensityOperatorT<Scalar> reduced_thermal_pdc(const SqueezeMatrixT<Scalar>& s, int n_max,
                                             const ModeLabel& idler = {"idler",
                                                                       Statistics::bosonic}) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  require_valid(s);
  if (std::abs(s.s21) >= std::abs(s.s11))
    throw std::invalid_argument("reduced_thermal_pdc: |S21| >= |S11|");
  const Scalar q = std::norm(s.s21) / std::norm(s.s11);
  std::vector<FockBasisState> basis;
  Matrix m = Matrix::Zero(n_max + 1, n_max + 1);
  Scalar weight = Scalar(1) / std::norm(s.s11);  // = 1 - q under the constraints
  for (int n = 0; n <= n_max; ++n, weight *= q) {
    basis.push_back(FockBasisState{n});
    m(n, n) = weight;
  }
  return DensityOperatorT<Scalar>({idler}, std::move(basis), std::move(m),
                                  std::pow(q, Scalar(n_max + 1)));
}

/// Effective temperature of the reduced geometric state: the T for which
/// one idler quantum costs the Boltzmann factor q = |S21/S11|^2, i.e.
/// T = hbar omega_I / (2 k_B ln(|S11|/|S21|)). Under the identification
/// tanh r = exp(-pi Omega) the log equals pi*Omega and T reduces exactly to
/// the Davies-Unruh temperature hbar a/(2 pi c k_B). Zero when S21 = 0.
template <typename Scalar>
Scalar unruh_temperature_from_matrix(const SqueezeMatrixT<Scalar>& s, Scalar omega_idler,
                                     UnitSystem units = UnitSystem::si) {
  require_valid(s);
  if (omega_idler <= Scalar(0)) throw std::invalid_argument("idler frequency must be > 0");
  if (std::abs(s.s21) == Scalar(0)) return Scalar(0);
  if (std::abs(s.s11) <= std::abs(s.s21))
    throw std::invalid_argument("unruh_temperature_from_matrix: |S11| <= |S21|");
  const Scalar log_ratio = std::log(std::abs(s.s11) / std::abs(s.s21));
  if (units == UnitSystem::natural) return omega_idler / (2 * log_ratio);
  return Scalar(si::hbar) * omega_idler / (2 * Scalar(si::boltzmann) * log_ratio);
}

}  // namespace rindler

#endif
