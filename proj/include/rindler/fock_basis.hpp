#ifndef RINDLER_FOCK_BASIS_HPP
#define RINDLER_FOCK_BASIS_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rindler {

enum class Statistics { bosonic, fermionic };

inline const char* name_of(Statistics s) {
  return s == Statistics::bosonic ? "bosonic" : "fermionic";
}

/// A labeled field mode. Names must be unique within one state space and
/// statistics must be homogeneous across all modes of a state.
struct ModeLabel {
  std::string name;
  Statistics statistics = Statistics::bosonic;

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// Occupation-number list aligned with an ordered mode list.
/// Ordering (and hence canonical basis enumeration) is lexicographic.
struct FockBasisState {
  std::vector<int> occupations;

  FockBasisState() = default;
  explicit FockBasisState(std::vector<int> occ) : occupations(std::move(occ)) {}
  FockBasisState(std::initializer_list<int> occ) : occupations(occ) {}

  int total_excitation() const {
    return std::accumulate(occupations.begin(), occupations.end(), 0);
  }

  auto operator<=>(const FockBasisState&) const = default;
};

inline void check_mode_list(const std::vector<ModeLabel>& modes) {
  if (modes.empty()) throw std::invalid_argument("mode list must not be empty");
  const Statistics stats = modes.front().statistics;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].statistics != stats)
      throw std::invalid_argument("mixed statistics within one state space");
    for (std::size_t j = i + 1; j < modes.size(); ++j)
      if (modes[i].name == modes[j].name)
        throw std::invalid_argument("duplicate mode label '" + modes[i].name + "'");
  }
}

/// Full product basis over `n_modes` modes with per-mode occupations in
/// [0, max_occupation], enumerated lexicographically.
inline std::vector<FockBasisState> enumerate_basis(int n_modes, int max_occupation) {
  if (n_modes < 1 || max_occupation < 0)
    throw std::invalid_argument("enumerate_basis: bad dimensions");
  std::vector<FockBasisState> basis;
  std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
  while (true) {
    basis.push_back(FockBasisState{occ});
    int k = n_modes - 1;
    while (k >= 0 && occ[static_cast<std::size_t>(k)] == max_occupation) {
      occ[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++occ[static_cast<std::size_t>(k)];
  }
  return basis;
}

/// Two-mode basis ordered by total excitation n = 0..max_total and
/// lexicographically within each sector: |00>, |01>, |10>, |02>, |11>, |20>, ...
inline std::vector<FockBasisState> graded_two_mode_basis(int max_total) {
  if (max_total < 0) throw std::invalid_argument("graded_two_mode_basis: negative cap");
  std::vector<FockBasisState> basis;
  basis.reserve(static_cast<std::size_t>((max_total + 1) * (max_total + 2) / 2));
  for (int n = 0; n <= max_total; ++n)
    for (int m = 0; m <= n; ++m) basis.push_back(FockBasisState{m, n - m});
  return basis;
}

}  // namespace rindler

#endif
