#ifndef RINDLER_FOCK_HPP
#define RINDLER_FOCK_HPP

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rindler/fock_basis.hpp"

namespace rindler {

/// How much probability a truncated expansion has dropped. Dropped weight is
/// recorded here and never silently renormalized away.
template <typename Scalar>
struct TruncationConfigT {
  int n_max = 12;                 // per-bosonic-mode occupation cap
  Scalar tail_tolerance = Scalar(1e-10);

  /// Smallest cap whose analytic tail bound xi^(n_max+1), xi = tanh^2 r,
  /// stays below tail_tolerance for vacuum-derived states.
  static TruncationConfigT for_squeeze(Scalar r, Scalar tail_tolerance = Scalar(1e-10)) {
    if (r < Scalar(0)) throw std::invalid_argument("negative squeeze parameter");
    const Scalar xi = std::tanh(r) * std::tanh(r);
    int n = 1;
    if (xi > Scalar(0)) {
      while (std::pow(xi, Scalar(n + 1)) >= tail_tolerance && n < 1000000) ++n;
    }
    return {n, tail_tolerance};
  }
};

using TruncationConfig = TruncationConfigT<double>;

/// Sparse state vector over a truncated multi-mode Fock basis.
/// Amplitudes live in an ordered map, so iteration (and serialization) is
/// deterministic in lexicographic basis order.
template <typename Scalar>
class StateVectorT {
 public:
  using Complex = std::complex<Scalar>;
  using AmplitudeMap = std::map<FockBasisState, Complex>;

  StateVectorT(std::vector<ModeLabel> modes, int max_occupation)
      : modes_(std::move(modes)), max_occupation_(max_occupation) {
    check_mode_list(modes_);
    if (max_occupation_ < 0)
      throw std::invalid_argument("negative occupation cap");
    statistics_ = modes_.front().statistics;
    if (statistics_ == Statistics::fermionic) max_occupation_ = 1;  // Pauli
  }

  const std::vector<ModeLabel>& modes() const { return modes_; }
  Statistics statistics() const { return statistics_; }
  int max_occupation() const { return max_occupation_; }
  const AmplitudeMap& amplitudes() const { return amps_; }
  std::size_t support_size() const { return amps_.size(); }

  int mode_index(const ModeLabel& mode) const {
    for (std::size_t k = 0; k < modes_.size(); ++k)
      if (modes_[k] == mode) return static_cast<int>(k);
    throw std::invalid_argument("unknown mode label '" + mode.name + "'");
  }

  Complex amplitude(const FockBasisState& basis) const {
    auto it = amps_.find(basis);
    return it == amps_.end() ? Complex(0) : it->second;
  }

  void set_amplitude(const FockBasisState& basis, Complex value) {
    check_occupations(basis);
    if (value == Complex(0))
      amps_.erase(basis);
    else
      amps_[basis] = value;
  }

  void accumulate(const FockBasisState& basis, Complex value) {
    check_occupations(basis);
    if (value == Complex(0)) return;
    amps_[basis] += value;
  }

  Scalar squared_norm() const {
    Scalar s = 0;
    for (const auto& [basis, amp] : amps_) s += std::norm(amp);
    return s;
  }
  Scalar norm() const { return std::sqrt(squared_norm()); }

  /// Scales to unit norm. The state is exactly normalized afterwards, so the
  /// truncation-deficit diagnostic is reset to zero.
  void normalize() {
    const Scalar n = norm();
    if (n <= Scalar(0)) throw std::domain_error("cannot normalize the zero vector");
    for (auto& [basis, amp] : amps_) amp /= n;
    deficit_ = 0;
  }

  Scalar truncation_deficit() const { return deficit_; }
  void add_truncation_deficit(Scalar d) { deficit_ += d; }
  void set_truncation_deficit(Scalar d) { deficit_ = d; }

 private:
  void check_occupations(const FockBasisState& basis) const {
    if (basis.occupations.size() != modes_.size())
      throw std::invalid_argument("occupation list length does not match mode count");
    for (int n : basis.occupations) {
      if (n < 0 || n > max_occupation_)
        throw std::invalid_argument("occupation outside [0, n_max]");
    }
  }

  std::vector<ModeLabel> modes_;
  Statistics statistics_ = Statistics::bosonic;
  int max_occupation_ = 0;
  AmplitudeMap amps_;
  Scalar deficit_ = 0;
};

using StateVector = StateVectorT<double>;

/// Hermitian operator over an explicitly enumerated truncated Fock basis.
template <typename Scalar>
class DensityOperatorT {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using Index = Eigen::Index;

  DensityOperatorT(std::vector<ModeLabel> modes, std::vector<FockBasisState> basis,
                   Matrix matrix, Scalar truncation_deficit = 0)
      : modes_(std::move(modes)),
        basis_(std::move(basis)),
        matrix_(std::move(matrix)),
        deficit_(truncation_deficit) {
    check_mode_list(modes_);
    const Index dim = static_cast<Index>(basis_.size());
    if (matrix_.rows() != dim || matrix_.cols() != dim)
      throw std::invalid_argument("matrix dimension does not match basis size");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].occupations.size() != modes_.size())
        throw std::invalid_argument("basis occupation length does not match mode count");
      index_.emplace(basis_[i], static_cast<Index>(i));
    }
    if (index_.size() != basis_.size())
      throw std::invalid_argument("duplicate basis state");
    if (hermiticity_error() > Scalar(1e-12))
      throw std::invalid_argument("matrix is not Hermitian within 1e-12");
  }

  const std::vector<ModeLabel>& modes() const { return modes_; }
  const std::vector<FockBasisState>& basis() const { return basis_; }
  const Matrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }
  Statistics statistics() const { return modes_.front().statistics; }

  /// Index of a basis state, or -1 if it lies outside the enumerated basis.
  Index index_of(const FockBasisState& b) const {
    auto it = index_.find(b);
    return it == index_.end() ? Index(-1) : it->second;
  }

  /// Matrix element by occupation lists; entries outside the enumerated
  /// (truncated) basis are zero.
  Complex entry(const FockBasisState& row, const FockBasisState& col) const {
    const Index i = index_of(row), j = index_of(col);
    if (i < 0 || j < 0) return Complex(0);
    return matrix_(i, j);
  }

  Scalar trace() const { return matrix_.trace().real(); }
  Scalar truncation_deficit() const { return deficit_; }

  Scalar hermiticity_error() const {
    return (matrix_ - matrix_.adjoint()).template lpNorm<Eigen::Infinity>();
  }

 private:
  std::vector<ModeLabel> modes_;
  std::vector<FockBasisState> basis_;
  std::map<FockBasisState, Index> index_;
  Matrix matrix_;
  Scalar deficit_ = 0;
};

using DensityOperator = DensityOperatorT<double>;

// ---------------------------------------------------------------------------
// ladder operators

/// Creation operator on `mode`. Bosonic: sqrt(n+1)|n+1>, components pushed
/// past n_max are dropped with their probability added to the truncation
/// deficit. Fermionic: |0> -> |1> with coefficient +1, |1> -> 0 (exact
/// algebra, not truncation). No inter-mode anticommutation signs are applied;
/// cavity modes are treated as independent.
template <typename Scalar>
StateVectorT<Scalar> apply_creation(const StateVectorT<Scalar>& state, const ModeLabel& mode) {
  const int k = state.mode_index(mode);
  StateVectorT<Scalar> out(state.modes(), state.max_occupation());
  out.set_truncation_deficit(state.truncation_deficit());
  const bool fermionic = state.statistics() == Statistics::fermionic;
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int n = basis.occupations[static_cast<std::size_t>(k)];
    if (fermionic) {
      if (n == 1) continue;  // (c^dag)^2 = 0
      FockBasisState up = basis;
      up.occupations[static_cast<std::size_t>(k)] = 1;
      out.accumulate(up, amp);
    } else {
      if (n + 1 > state.max_occupation()) {
        out.add_truncation_deficit(std::norm(amp) * Scalar(n + 1));
        continue;
      }
      FockBasisState up = basis;
      ++up.occupations[static_cast<std::size_t>(k)];
      out.accumulate(up, amp * std::sqrt(Scalar(n + 1)));
    }
  }
  return out;
}

/// Annihilation operator on `mode`; adjoint of apply_creation. The |0>
/// component maps to zero for either statistics.
template <typename Scalar>
StateVectorT<Scalar> apply_annihilation(const StateVectorT<Scalar>& state, const ModeLabel& mode) {
  const int k = state.mode_index(mode);
  StateVectorT<Scalar> out(state.modes(), state.max_occupation());
  out.set_truncation_deficit(state.truncation_deficit());
  for (const auto& [basis, amp] : state.amplitudes()) {
    const int n = basis.occupations[static_cast<std::size_t>(k)];
    if (n == 0) continue;
    FockBasisState down = basis;
    --down.occupations[static_cast<std::size_t>(k)];
    out.accumulate(down, amp * std::sqrt(Scalar(n)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// state algebra

/// Tensor product: amplitudes multiply, mode lists concatenate.
template <typename Scalar>
StateVectorT<Scalar> tensor(const StateVectorT<Scalar>& a, const StateVectorT<Scalar>& b) {
  if (a.statistics() != b.statistics())
    throw std::invalid_argument("tensor: mixed statistics");
  std::vector<ModeLabel> modes = a.modes();
  modes.insert(modes.end(), b.modes().begin(), b.modes().end());
  StateVectorT<Scalar> out(modes, std::max(a.max_occupation(), b.max_occupation()));
  for (const auto& [ba, va] : a.amplitudes()) {
    for (const auto& [bb, vb] : b.amplitudes()) {
      std::vector<int> occ = ba.occupations;
      occ.insert(occ.end(), bb.occupations.begin(), bb.occupations.end());
      out.set_amplitude(FockBasisState{std::move(occ)}, va * vb);
    }
  }
  const Scalar da = a.truncation_deficit(), db = b.truncation_deficit();
  out.set_truncation_deficit(da + db - da * db);
  return out;
}

/// ca*a + cb*b over identical mode lists. The combined truncation deficit
/// |ca|^2 da + |cb|^2 db is exact when a and b are orthogonal truncated
/// expansions of normalized states (the way the protocol uses it).
template <typename Scalar>
StateVectorT<Scalar> superpose(std::complex<Scalar> ca, const StateVectorT<Scalar>& a,
                               std::complex<Scalar> cb, const StateVectorT<Scalar>& b) {
  if (a.modes() != b.modes())
    throw std::invalid_argument("superpose: mode lists differ");
  StateVectorT<Scalar> out(a.modes(), std::max(a.max_occupation(), b.max_occupation()));
  for (const auto& [basis, amp] : a.amplitudes()) out.accumulate(basis, ca * amp);
  for (const auto& [basis, amp] : b.amplitudes()) out.accumulate(basis, cb * amp);
  out.set_truncation_deficit(std::norm(ca) * a.truncation_deficit() +
                             std::norm(cb) * b.truncation_deficit());
  return out;
}

template <typename Scalar>
std::complex<Scalar> inner_product(const StateVectorT<Scalar>& a, const StateVectorT<Scalar>& b) {
  if (a.modes() != b.modes())
    throw std::invalid_argument("inner_product: mode lists differ");
  std::complex<Scalar> s(0);
  for (const auto& [basis, amp] : a.amplitudes()) s += std::conj(amp) * b.amplitude(basis);
  return s;
}

// ---------------------------------------------------------------------------
// density operators

/// Outer product |psi><psi| over the support of `state` (lexicographically
/// ordered). The state must be normalized up to its recorded truncation
/// deficit; the deficit becomes the operator's trace deficit. Truncated
/// expansions are not renormalized, so every surviving matrix element equals
/// the untruncated one exactly.
template <typename Scalar>
DensityOperatorT<Scalar> density_from_pure(const StateVectorT<Scalar>& state) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  const Scalar n2 = state.squared_norm();
  if (std::abs(Scalar(1) - n2 - state.truncation_deficit()) > Scalar(1e-9))
    throw std::invalid_argument("density_from_pure: state is not normalized "
                                "(beyond its recorded truncation deficit)");
  std::vector<FockBasisState> basis;
  basis.reserve(state.support_size());
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> v(
      static_cast<Eigen::Index>(state.support_size()));
  Eigen::Index i = 0;
  for (const auto& [b, amp] : state.amplitudes()) {
    basis.push_back(b);
    v(i++) = amp;
  }
  Matrix m = v * v.adjoint();
  return DensityOperatorT<Scalar>(state.modes(), std::move(basis), std::move(m),
                                  Scalar(1) - n2);
}

/// Trace over every mode not in `keep`. Trace and Hermiticity are preserved;
/// the result basis enumerates the kept modes only (lexicographic order of
/// the kept occupation lists actually present in the input basis).
template <typename Scalar>
DensityOperatorT<Scalar> partial_trace(const DensityOperatorT<Scalar>& rho,
                                       const std::vector<ModeLabel>& keep) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  using Index = typename DensityOperatorT<Scalar>::Index;
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep list");

  const auto& modes = rho.modes();
  std::vector<bool> keep_mask(modes.size(), false);
  for (const auto& label : keep) {
    bool found = false;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      if (modes[k] == label) {
        if (keep_mask[k]) throw std::invalid_argument("partial_trace: repeated keep label");
        keep_mask[k] = found = true;
      }
    }
    if (!found)
      throw std::invalid_argument("partial_trace: unknown mode label '" + label.name + "'");
  }

  std::vector<ModeLabel> kept_modes;
  for (std::size_t k = 0; k < modes.size(); ++k)
    if (keep_mask[k]) kept_modes.push_back(modes[k]);

  // split each basis state into kept / traced parts
  const auto split = [&](const FockBasisState& b) {
    std::pair<FockBasisState, FockBasisState> parts;
    for (std::size_t k = 0; k < modes.size(); ++k)
      (keep_mask[k] ? parts.first : parts.second).occupations.push_back(b.occupations[k]);
    return parts;
  };

  std::map<FockBasisState, Index> kept_index;
  std::vector<Index> kept_of(rho.basis().size());
  std::map<FockBasisState, std::vector<Index>> traced_groups;
  for (std::size_t i = 0; i < rho.basis().size(); ++i) {
    auto [kept, traced] = split(rho.basis()[i]);
    kept_index.emplace(std::move(kept), Index(0));
    traced_groups[traced].push_back(static_cast<Index>(i));
  }
  std::vector<FockBasisState> out_basis;
  out_basis.reserve(kept_index.size());
  for (auto& [b, idx] : kept_index) {
    idx = static_cast<Index>(out_basis.size());
    out_basis.push_back(b);
  }
  for (std::size_t i = 0; i < rho.basis().size(); ++i)
    kept_of[i] = kept_index.at(split(rho.basis()[i]).first);

  Matrix out = Matrix::Zero(static_cast<Index>(out_basis.size()),
                            static_cast<Index>(out_basis.size()));
  if (kept_modes.size() == modes.size()) {
    // tracing over the empty set: identity up to basis reordering
    for (std::size_t i = 0; i < rho.basis().size(); ++i)
      for (std::size_t j = 0; j < rho.basis().size(); ++j)
        out(kept_of[i], kept_of[j]) += rho.matrix()(static_cast<Index>(i), static_cast<Index>(j));
  } else {
    for (const auto& [traced, members] : traced_groups)
      for (Index i : members)
        for (Index j : members) out(kept_of[static_cast<std::size_t>(i)],
                                     kept_of[static_cast<std::size_t>(j)]) += rho.matrix()(i, j);
  }
  return DensityOperatorT<Scalar>(std::move(kept_modes), std::move(out_basis), std::move(out),
                                  rho.truncation_deficit());
}

/// Kronecker product of two density operators over disjoint mode sets.
template <typename Scalar>
DensityOperatorT<Scalar> tensor(const DensityOperatorT<Scalar>& a, const DensityOperatorT<Scalar>& b) {
  using Matrix = typename DensityOperatorT<Scalar>::Matrix;
  using Index = typename DensityOperatorT<Scalar>::Index;
  std::vector<ModeLabel> modes = a.modes();
  modes.insert(modes.end(), b.modes().begin(), b.modes().end());
  std::vector<FockBasisState> basis;
  basis.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (const auto& ba : a.basis())
    for (const auto& bb : b.basis()) {
      std::vector<int> occ = ba.occupations;
      occ.insert(occ.end(), bb.occupations.begin(), bb.occupations.end());
      basis.push_back(FockBasisState{std::move(occ)});
    }
  Matrix m(a.dim() * b.dim(), a.dim() * b.dim());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      m.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) = a.matrix()(i, j) * b.matrix();
  const Scalar da = a.truncation_deficit(), db = b.truncation_deficit();
  return DensityOperatorT<Scalar>(std::move(modes), std::move(basis), std::move(m),
                                  da + db - da * db);
}

// ---------------------------------------------------------------------------
// spectral functionals

/// Incremented whenever an eigenvalue in [-1e-10, 0) is clamped to zero for
/// an entropy evaluation.
inline std::atomic<long>& entropy_clamp_count() {
  static std::atomic<long> count{0};
  return count;
}

/// Shannon-style sum -sum lambda log2 lambda over eigenvalues > 1e-14.
/// Eigenvalues in [-1e-10, 0) are clamped to zero (counted in
/// entropy_clamp_count); anything below -1e-10 signals corrupted input.
template <typename Scalar>
Scalar entropy_from_eigenvalues(const std::vector<Scalar>& eigenvalues) {
  Scalar s = 0;
  for (Scalar lambda : eigenvalues) {
    if (lambda < Scalar(-1e-10))
      throw std::domain_error("entropy: eigenvalue below -1e-10; operator is not PSD");
    if (lambda < Scalar(0)) {
      ++entropy_clamp_count();
      continue;
    }
    if (lambda > Scalar(1e-14)) s -= lambda * std::log2(lambda);
  }
  return s;
}

template <typename Scalar>
std::vector<Scalar> eigenvalues_sorted(const DensityOperatorT<Scalar>& rho) {
  Eigen::SelfAdjointEigenSolver<typename DensityOperatorT<Scalar>::Matrix> solver(
      rho.matrix(), Eigen::EigenvaluesOnly);
  std::vector<Scalar> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Von Neumann entropy in bits, -Tr(rho log2 rho).
template <typename Scalar>
Scalar von_neumann_entropy(const DensityOperatorT<Scalar>& rho) {
  return entropy_from_eigenvalues(eigenvalues_sorted(rho));
}

/// Fidelity <psi|rho|psi> of a pure state against a density operator over
/// the same mode list. Components of psi outside rho's truncated basis see
/// zero matrix elements.
template <typename Scalar>
Scalar fidelity_pure(const StateVectorT<Scalar>& psi, const DensityOperatorT<Scalar>& rho) {
  if (psi.modes() != rho.modes())
    throw std::invalid_argument("fidelity_pure: basis mismatch (mode lists differ)");
  std::complex<Scalar> f(0);
  for (const auto& [row, a_row] : psi.amplitudes()) {
    const auto i = rho.index_of(row);
    if (i < 0) continue;
    for (const auto& [col, a_col] : psi.amplitudes()) {
      const auto j = rho.index_of(col);
      if (j < 0) continue;
      f += std::conj(a_row) * rho.matrix()(i, j) * a_col;
    }
  }
  if (std::abs(f.imag()) > Scalar(1e-10))
    throw std::domain_error("fidelity_pure: non-real value; operator corrupted");
  return f.real();
}

}  // namespace rindler

#endif
