#ifndef RINDLER_TELEPORT_HPP
#define RINDLER_TELEPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rindler/fock.hpp"
#include "rindler/vacuum.hpp"

namespace rindler {

/// Logical qubit alpha|0> + beta|1> in the dual-rail encoding.
template <typename Scalar>
struct LogicalQubitT {
  using Complex = std::complex<Scalar>;
  Complex alpha{1};
  Complex beta{0};

  void validate() const {
    if (std::abs(std::norm(alpha) + std::norm(beta) - Scalar(1)) > Scalar(1e-12))
      throw std::invalid_argument("logical qubit is not normalized");
  }

  static LogicalQubitT normalized(Complex a, Complex b) {
    const Scalar n = std::sqrt(std::norm(a) + std::norm(b));
    if (n <= Scalar(0)) throw std::invalid_argument("zero logical state");
    return {a / n, b / n};
  }

  /// (|0> + |1>)/sqrt(2), the default input for the entropy analysis.
  static LogicalQubitT plus() {
    const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
    return {Complex(s), Complex(s)};
  }
};

using LogicalQubit = LogicalQubitT<double>;

/// Result {i, j} of the sender's Bell-basis measurement.
struct BellOutcome {
  int i = 0;
  int j = 0;

  void validate() const {
    if ((i != 0 && i != 1) || (j != 0 && j != 1))
      throw std::invalid_argument("Bell outcome bits must be 0 or 1");
  }

  static BellOutcome from_string(const std::string& s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
      throw std::invalid_argument("Bell outcome must be one of 00, 01, 10, 11");
    return {s[0] - '0', s[1] - '0'};
  }

  static std::array<BellOutcome, 4> all() {
    return {BellOutcome{0, 0}, BellOutcome{0, 1}, BellOutcome{1, 0}, BellOutcome{1, 1}};
  }
};

/// Receiver-side conditional amplitudes (x_ij, y_ij).
template <typename Scalar>
struct ConditionalAmplitudesT {
  using Complex = std::complex<Scalar>;
  Complex x{1};
  Complex y{0};

  void validate() const {
    if (std::abs(std::norm(x) + std::norm(y) - Scalar(1)) > Scalar(1e-12))
      throw std::invalid_argument("conditional amplitudes are not normalized");
  }
};

using ConditionalAmplitudes = ConditionalAmplitudesT<double>;

/// Dual-rail logical basis over two field modes of one party:
/// |0> = |1>_{mode_1} |0>_{mode_2}, |1> = |0>_{mode_1} |1>_{mode_2}.
struct DualRailEncoding {
  ModeLabel mode_1;
  ModeLabel mode_2;
  Statistics statistics = Statistics::bosonic;

  void validate() const {
    if (mode_1.name == mode_2.name)
      throw std::invalid_argument("dual-rail modes must be distinct");
    if (mode_1.statistics != statistics || mode_2.statistics != statistics)
      throw std::invalid_argument("dual-rail statistics tag mismatch");
  }

  static DualRailEncoding of(const std::string& base, Statistics stats) {
    return {{base + "1", stats}, {base + "2", stats}, stats};
  }
};

/// Region-I labels of the receiver's two cavity modes; the conditional
/// receiver states live on these.
inline DualRailEncoding receiver_region_I_encoding(Statistics stats) {
  return {{"R1_I", stats}, {"R2_I", stats}, stats};
}

// ---------------------------------------------------------------------------
// sender side

/// The (x_ij, y_ij) table: (00) -> (a, b), (01) -> (b, a), (10) -> (a, -b),
/// (11) -> (-b, a).
template <typename Scalar>
ConditionalAmplitudesT<Scalar> conditional_amplitudes(const LogicalQubitT<Scalar>& psi,
                                                      BellOutcome outcome) {
  psi.validate();
  outcome.validate();
  const auto a = psi.alpha, b = psi.beta;
  if (outcome.i == 0 && outcome.j == 0) return {a, b};
  if (outcome.i == 0 && outcome.j == 1) return {b, a};
  if (outcome.i == 1 && outcome.j == 0) return {a, -b};
  return {-b, a};
}

/// The shared four-mode entangled resource: one excitation per party, the
/// logical Bell state (|1010> + |0101>)/sqrt(2) over (A1, A2, R1, R2).
template <typename Scalar = double>
StateVectorT<Scalar> bell_resource(const DualRailEncoding& sender,
                                   const DualRailEncoding& receiver) {
  sender.validate();
  receiver.validate();
  std::vector<ModeLabel> modes{sender.mode_1, sender.mode_2, receiver.mode_1, receiver.mode_2};
  check_mode_list(modes);  // rejects label collisions between the parties
  StateVectorT<Scalar> state(modes, 1);
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  state.set_amplitude(FockBasisState{1, 0, 1, 0}, s);
  state.set_amplitude(FockBasisState{0, 1, 0, 1}, s);
  return state;
}

template <typename Scalar>
struct BellMeasurementT {
  Scalar probability = 0;
  ConditionalAmplitudesT<Scalar> amplitudes;
};

/// Exact logical-level Bell measurement: CNOT (client -> sender half),
/// Hadamard on the client, projection onto |i>|j>. Every outcome occurs
/// with probability 1/4 and leaves the receiver in x_ij|0> + y_ij|1>.
template <typename Scalar>
BellMeasurementT<Scalar> bell_measurement(const LogicalQubitT<Scalar>& psi, BellOutcome outcome) {
  using Complex = std::complex<Scalar>;
  psi.validate();
  outcome.validate();
  // qubit order (client, sender, receiver); index = 4c + 2a + r
  const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
  std::array<Complex, 8> v{};
  v[0] = psi.alpha * s;  // |0>(|00>+|11>)/sqrt2
  v[3] = psi.alpha * s;
  v[4] = psi.beta * s;
  v[7] = psi.beta * s;
  std::swap(v[4], v[6]);  // CNOT: flip the sender bit when the client bit is 1
  std::swap(v[5], v[7]);
  std::array<Complex, 8> w{};
  for (int ar = 0; ar < 4; ++ar) {  // Hadamard on the client bit
    w[ar] = s * (v[ar] + v[4 + ar]);
    w[4 + ar] = s * (v[ar] - v[4 + ar]);
  }
  const Complex x = w[4 * outcome.i + 2 * outcome.j];
  const Complex y = w[4 * outcome.i + 2 * outcome.j + 1];
  const Scalar p = std::norm(x) + std::norm(y);
  if (p <= Scalar(0)) throw std::domain_error("bell_measurement: zero-probability branch");
  const Scalar inv = Scalar(1) / std::sqrt(p);
  return {p, {x * inv, y * inv}};
}

// ---------------------------------------------------------------------------
// receiver side

/// Pure dual-rail state x|1,0> + y|0,1> over an encoding's two modes.
template <typename Scalar>
StateVectorT<Scalar> dual_rail_state(std::complex<Scalar> x, std::complex<Scalar> y,
                                     const DualRailEncoding& encoding, int max_occupation = 1) {
  encoding.validate();
  StateVectorT<Scalar> state({encoding.mode_1, encoding.mode_2}, max_occupation);
  state.set_amplitude(FockBasisState{1, 0}, x);
  state.set_amplitude(FockBasisState{0, 1}, y);
  return state;
}

/// Closed-form conditional receiver state on the region-I two-mode basis,
/// graded by total excitation n (the structure behind the block-tridiagonal
/// picture). Per sector n >= 1, with xi = tanh^2 r and w = xi^(n-1)/cosh^6 r:
///   diagonal  |m, n-m>:  w * (m|x|^2 + (n-m)|y|^2)
///   coherence |m+1, n-m-1><m, n-m|:  w * x y* sqrt((m+1)(n-m))
/// The n = 0 sector carries exactly zero weight. Sector weights sum to one
/// via sum_n n(n+1)/2 xi^(n-1) = (1-xi)^(-3); the remainder past
/// max_total_excitation is recorded as the truncation deficit.
template <typename Scalar>
DensityOperatorT<Scalar> receiver_state_bosonic_closed(const ConditionalAmplitudesT<Scalar>& amps,
                                                       Scalar r, int max_total_excitation) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  using Index = typename DensityOperatorT<Scalar>::Index;
  detail::check_bosonic_r(r);
  amps.validate();
  const auto encoding = receiver_region_I_encoding(Statistics::bosonic);
  auto basis = graded_two_mode_basis(max_total_excitation);
  const Index dim = static_cast<Index>(basis.size());

  const Scalar xi = std::tanh(r) * std::tanh(r);
  const Scalar sech2 = Scalar(1) - xi;
  const Scalar w1 = sech2 * sech2 * sech2;  // 1/cosh^6 r
  const Scalar x2 = std::norm(amps.x), y2 = std::norm(amps.y);
  const std::complex<Scalar> xy = amps.x * std::conj(amps.y);

  // graded basis: sector n starts at offset n(n+1)/2, entry m is |m, n-m>
  const auto at = [](int n, int m) { return static_cast<Index>(n * (n + 1) / 2 + m); };

  Matrix mat = Matrix::Zero(dim, dim);
  Scalar trace = 0;
  Scalar w = w1;
  for (int n = 1; n <= max_total_excitation; ++n, w *= xi) {
    for (int m = 0; m <= n; ++m) {
      const Scalar p = w * (Scalar(m) * x2 + Scalar(n - m) * y2);
      mat(at(n, m), at(n, m)) = p;
      trace += p;
    }
    for (int m = 0; m + 1 <= n; ++m) {
      const std::complex<Scalar> c = w * xy * std::sqrt(Scalar((m + 1) * (n - m)));
      mat(at(n, m + 1), at(n, m)) = c;
      mat(at(n, m), at(n, m + 1)) = std::conj(c);
    }
  }
  return DensityOperatorT<Scalar>({encoding.mode_1, encoding.mode_2}, std::move(basis),
                                  std::move(mat), (x2 + y2) - trace);
}

/// Independent route to the same state: expand x|0>_M + y|1>_M over the four
/// Rindler modes (R1_I, R1_II, R2_I, R2_II) with the vacuum module, form the
/// density operator, and trace out region II. n_max caps each mode's
/// occupation; every surviving matrix element is exact.
template <typename Scalar>
DensityOperatorT<Scalar> receiver_state_bosonic_bruteforce(
    const ConditionalAmplitudesT<Scalar>& amps, Scalar r, int n_max) {
  detail::check_bosonic_r(r);
  amps.validate();
  const ModePair pair_1 = ModePair::bosonic("R1");
  const ModePair pair_2 = ModePair::bosonic("R2");
  const auto logical_zero =
      tensor(bosonic_one_particle(r, pair_1, n_max), bosonic_vacuum(r, pair_2, n_max));
  const auto logical_one =
      tensor(bosonic_vacuum(r, pair_1, n_max), bosonic_one_particle(r, pair_2, n_max));
  const auto phi = superpose(amps.x, logical_zero, amps.y, logical_one);
  const auto rho = density_from_pure(phi);
  return partial_trace(rho, {pair_1.region_I, pair_2.region_I});
}

/// Fermionic conditional receiver state, exact on the four-dimensional
/// two-mode space: cos^2 r |phi_ij><phi_ij| + sin^2 r |11><11|.
template <typename Scalar>
DensityOperatorT<Scalar> receiver_state_fermionic(const ConditionalAmplitudesT<Scalar>& amps,
                                                  Scalar r) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  detail::check_fermionic_r(r);
  amps.validate();
  const auto encoding = receiver_region_I_encoding(Statistics::fermionic);
  // graded == lexicographic here: |00>, |01>, |10>, |11>
  std::vector<FockBasisState> basis{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const Scalar c2 = std::cos(r) * std::cos(r);
  const Scalar s2 = std::sin(r) * std::sin(r);
  Matrix m = Matrix::Zero(4, 4);
  m(2, 2) = c2 * std::norm(amps.x);             // |10> carries x
  m(1, 1) = c2 * std::norm(amps.y);             // |01> carries y
  m(2, 1) = c2 * amps.x * std::conj(amps.y);
  m(1, 2) = std::conj(m(2, 1));
  m(3, 3) = s2;
  return DensityOperatorT<Scalar>({encoding.mode_1, encoding.mode_2}, std::move(basis),
                                  std::move(m));
}

/// Pauli correction Z^i X^j restricted to the one-excitation logical span
/// {|1,0>, |0,1>}; identity on every other sector. Unitary, so trace and
/// spectrum are preserved.
template <typename Scalar>
DensityOperatorT<Scalar> apply_correction(const DensityOperatorT<Scalar>& rho,
                                          BellOutcome outcome) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  using Index = typename DensityOperatorT<Scalar>::Index;
  using Complex = std::complex<Scalar>;
  outcome.validate();
  if (rho.modes().size() != 2)
    throw std::invalid_argument("apply_correction expects a two-mode region-I operator");
  const Index i0 = rho.index_of(FockBasisState{1, 0});  // logical |0>
  const Index i1 = rho.index_of(FockBasisState{0, 1});  // logical |1>
  if (i0 < 0 || i1 < 0)
    throw std::invalid_argument("apply_correction: basis lacks the 1-excitation sector");
  if (outcome.i == 0 && outcome.j == 0) return rho;

  Eigen::Matrix<Complex, 2, 2> logical = Eigen::Matrix<Complex, 2, 2>::Identity();
  if (outcome.j == 1) {  // X: swap logical |0> and |1>
    Eigen::Matrix<Complex, 2, 2> x;
    x << Complex(0), Complex(1), Complex(1), Complex(0);
    logical = x * logical;
  }
  if (outcome.i == 1) {  // Z: phase -1 on logical |1>
    Eigen::Matrix<Complex, 2, 2> z;
    z << Complex(1), Complex(0), Complex(0), Complex(-1);
    logical = z * logical;
  }
  // U differs from the identity only on the {i0, i1} rows and columns, so
  // U rho U^dag reduces to updating those two row/column pairs
  Matrix rotated = rho.matrix();
  using RowPair = Eigen::Matrix<Complex, 2, Eigen::Dynamic>;
  RowPair rows(2, rho.dim());
  rows.row(0) = rotated.row(i0);
  rows.row(1) = rotated.row(i1);
  rows = (logical * rows).eval();
  rotated.row(i0) = rows.row(0);
  rotated.row(i1) = rows.row(1);
  using ColPair = Eigen::Matrix<Complex, Eigen::Dynamic, 2>;
  ColPair cols(rho.dim(), 2);
  cols.col(0) = rotated.col(i0);
  cols.col(1) = rotated.col(i1);
  cols = (cols * logical.adjoint()).eval();
  rotated.col(i0) = cols.col(0);
  rotated.col(i1) = cols.col(1);
  return DensityOperatorT<Scalar>(rho.modes(), rho.basis(), std::move(rotated),
                                  rho.truncation_deficit());
}

// ---------------------------------------------------------------------------
// figures of merit

template <typename Scalar>
struct FidelityReportT {
  Scalar raw = 0;             // <psi_I| rho_corrected |psi_I> on the truncated state
  Scalar tail_corrected = 0;  // acceptance-grade value
  Scalar truncation_deficit = 0;
};

using FidelityReport = FidelityReportT<double>;

/// Closed-form fidelity law: 1/cosh^6 r (bosonic) or cos^2 r (fermionic).
template <typename Scalar>
Scalar teleport_fidelity_closed_form(Statistics statistics, Scalar r) {
  if (statistics == Statistics::bosonic) {
    detail::check_bosonic_r(r);
    const Scalar sech2 = Scalar(1) / (std::cosh(r) * std::cosh(r));
    return sech2 * sech2 * sech2;
  }
  detail::check_fermionic_r(r);
  return std::cos(r) * std::cos(r);
}

/// Protocol-pipeline fidelity: conditional amplitudes -> receiver state ->
/// Pauli correction -> overlap with |psi>_I. Independent of psi and of the
/// outcome. The dropped n > n_max sectors are orthogonal to the
/// one-excitation subspace, so the tail correction leaves the raw value
/// unchanged; both are reported.
template <typename Scalar>
FidelityReportT<Scalar> teleport_fidelity(Statistics statistics, Scalar r,
                                          const LogicalQubitT<Scalar>& psi, int n_max,
                                          BellOutcome outcome = {0, 0}) {
  const auto amps = conditional_amplitudes(psi, outcome);
  DensityOperatorT<Scalar> rho =
      statistics == Statistics::bosonic
          ? receiver_state_bosonic_closed(amps, r, n_max)
          : receiver_state_fermionic(amps, r);
  const auto corrected = apply_correction(rho, outcome);
  const auto psi_region_I = dual_rail_state(psi.alpha, psi.beta,
                                            receiver_region_I_encoding(statistics),
                                            std::max(1, n_max));
  const Scalar raw = fidelity_pure(psi_region_I, corrected);
  return {raw, raw, rho.truncation_deficit()};
}

template <typename Scalar>
struct SectorWeightT {
  int n = 0;
  Scalar weight = 0;
};

/// Trace of each total-excitation block. Weights sum to the operator's
/// trace; teleportation states have weight(0) = 0 and weight(1) =
/// 1/cosh^6 r, the receiver's probability of finding no thermal photons.
template <typename Scalar>
std::vector<SectorWeightT<Scalar>> sector_weights(const DensityOperatorT<Scalar>& rho) {
  int max_n = 0;
  for (const auto& b : rho.basis()) max_n = std::max(max_n, b.total_excitation());
  std::vector<SectorWeightT<Scalar>> weights(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) weights[static_cast<std::size_t>(n)].n = n;
  for (std::size_t i = 0; i < rho.basis().size(); ++i) {
    const int n = rho.basis()[i].total_excitation();
    weights[static_cast<std::size_t>(n)].weight +=
        rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  }
  return weights;
}

template <typename Scalar>
struct PostselectedSectorT {
  DensityOperatorT<Scalar> state;
  Scalar probability = 0;  // sector weight / trace
};

/// Post-selection on a photon-number check reporting total excitation n:
/// the renormalized n-sector block together with its probability.
template <typename Scalar>
PostselectedSectorT<Scalar> postselect_sector(const DensityOperatorT<Scalar>& rho, int n) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  using Index = typename DensityOperatorT<Scalar>::Index;
  std::vector<FockBasisState> basis;
  std::vector<Index> members;
  for (std::size_t i = 0; i < rho.basis().size(); ++i) {
    if (rho.basis()[i].total_excitation() == n) {
      basis.push_back(rho.basis()[i]);
      members.push_back(static_cast<Index>(i));
    }
  }
  if (basis.empty())
    throw std::invalid_argument("postselect_sector: no basis states with that excitation");
  Matrix block(static_cast<Index>(members.size()), static_cast<Index>(members.size()));
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      block(static_cast<Index>(a), static_cast<Index>(b)) = rho.matrix()(members[a], members[b]);
  const Scalar weight = block.trace().real();
  if (weight <= Scalar(0))
    throw std::domain_error("postselect_sector: sector has zero weight");
  block /= weight;
  return {DensityOperatorT<Scalar>(rho.modes(), std::move(basis), std::move(block)),
          weight / rho.trace()};
}

}  // namespace rindler

#endif
