#ifndef RINDLER_TEST_HELPERS_HPP
#define RINDLER_TEST_HELPERS_HPP

#include <algorithm>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "rindler/fock.hpp"

namespace rindler::test {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline std::complex<double> random_amplitude(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

/// Normalized random sparse state over the given modes.
inline StateVector random_state(const std::vector<ModeLabel>& modes, int n_max,
                                std::mt19937& rng, int support = 6) {
  StateVector state(modes, n_max);
  std::uniform_int_distribution<int> occ(0, state.max_occupation());
  while (static_cast<int>(state.support_size()) < support) {
    std::vector<int> occupations(modes.size());
    for (auto& n : occupations) n = occ(rng);
    state.set_amplitude(FockBasisState{std::move(occupations)}, random_amplitude(rng));
  }
  state.normalize();
  return state;
}

/// Largest amplitude difference between two states over the union of their
/// supports. Mode lists must agree.
inline double max_state_diff(const StateVector& a, const StateVector& b) {
  std::set<FockBasisState> keys;
  for (const auto& [k, v] : a.amplitudes()) keys.insert(k);
  for (const auto& [k, v] : b.amplitudes()) keys.insert(k);
  double worst = 0.0;
  for (const auto& k : keys) worst = std::max(worst, std::abs(a.amplitude(k) - b.amplitude(k)));
  return worst;
}

/// Largest elementwise difference between two operators, compared through
/// occupation keys so the bases may be enumerated differently. Entries
/// absent from a basis count as zero. A non-negative `max_total` restricts
/// the comparison to sectors with that many excitations or fewer.
inline double max_entry_diff(const DensityOperator& a, const DensityOperator& b,
                             int max_total = -1) {
  std::set<FockBasisState> keys(a.basis().begin(), a.basis().end());
  keys.insert(b.basis().begin(), b.basis().end());
  std::vector<FockBasisState> states;
  for (const auto& k : keys)
    if (max_total < 0 || k.total_excitation() <= max_total) states.push_back(k);
  double worst = 0.0;
  for (const auto& row : states)
    for (const auto& col : states)
      worst = std::max(worst, std::abs(a.entry(row, col) - b.entry(row, col)));
  return worst;
}

}  // namespace rindler::test

#endif
