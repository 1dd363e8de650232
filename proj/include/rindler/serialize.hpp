#ifndef RINDLER_SERIALIZE_HPP
#define RINDLER_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rindler/fock.hpp"

namespace rindler {

// ordered_json keeps insertion order, so dumps are deterministic and diffable
using json = nlohmann::ordered_json;

inline Statistics statistics_from_string(const std::string& s) {
  if (s == "bosonic") return Statistics::bosonic;
  if (s == "fermionic") return Statistics::fermionic;
  throw std::invalid_argument("unknown statistics tag '" + s + "'");
}

/// JSON document for a state vector: mode names, statistics, occupation cap,
/// truncation deficit, and the sparse amplitude list in lexicographic basis
/// order. Doubles survive a dump/parse round trip bit-exactly.
inline json serialize(const StateVector& state) {
  json doc;
  doc["format"] = "rindler.state_vector";
  doc["version"] = 1;
  doc["statistics"] = name_of(state.statistics());
  json modes = json::array();
  for (const auto& m : state.modes()) modes.push_back(m.name);
  doc["modes"] = std::move(modes);
  doc["max_occupation"] = state.max_occupation();
  doc["truncation_deficit"] = state.truncation_deficit();
  json amps = json::array();
  for (const auto& [basis, amp] : state.amplitudes()) {
    json entry;
    entry["occ"] = basis.occupations;
    entry["re"] = amp.real();
    entry["im"] = amp.imag();
    amps.push_back(std::move(entry));
  }
  doc["amplitudes"] = std::move(amps);
  return doc;
}

inline StateVector deserialize_state_vector(const json& doc) {
  if (doc.at("format") != "rindler.state_vector" || doc.at("version") != 1)
    throw std::invalid_argument("not a version-1 state_vector document");
  const Statistics stats = statistics_from_string(doc.at("statistics"));
  std::vector<ModeLabel> modes;
  for (const auto& name : doc.at("modes")) modes.push_back({name.get<std::string>(), stats});
  StateVector state(modes, doc.at("max_occupation").get<int>());
  for (const auto& entry : doc.at("amplitudes")) {
    state.set_amplitude(FockBasisState{entry.at("occ").get<std::vector<int>>()},
                        {entry.at("re").get<double>(), entry.at("im").get<double>()});
  }
  state.set_truncation_deficit(doc.at("truncation_deficit").get<double>());
  return state;
}

/// JSON document for a density operator: mode names, statistics, the basis
/// enumeration, and the matrix as row-major (re, im) pairs.
inline json serialize(const DensityOperator& rho) {
  json doc;
  doc["format"] = "rindler.density_operator";
  doc["version"] = 1;
  doc["statistics"] = name_of(rho.statistics());
  json modes = json::array();
  for (const auto& m : rho.modes()) modes.push_back(m.name);
  doc["modes"] = std::move(modes);
  json basis = json::array();
  for (const auto& b : rho.basis()) basis.push_back(b.occupations);
  doc["basis"] = std::move(basis);
  doc["truncation_deficit"] = rho.truncation_deficit();
  json matrix = json::array();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      matrix.push_back(json::array({rho.matrix()(i, j).real(), rho.matrix()(i, j).imag()}));
    }
  }
  doc["matrix"] = std::move(matrix);
  return doc;
}

inline DensityOperator deserialize_density_operator(const json& doc) {
  if (doc.at("format") != "rindler.density_operator" || doc.at("version") != 1)
    throw std::invalid_argument("not a version-1 density_operator document");
  const Statistics stats = statistics_from_string(doc.at("statistics"));
  std::vector<ModeLabel> modes;
  for (const auto& name : doc.at("modes")) modes.push_back({name.get<std::string>(), stats});
  std::vector<FockBasisState> basis;
  for (const auto& occ : doc.at("basis")) basis.push_back(FockBasisState{occ.get<std::vector<int>>()});
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const auto& flat = doc.at("matrix");
  if (static_cast<Eigen::Index>(flat.size()) != dim * dim)
    throw std::invalid_argument("matrix length does not match basis size");
  DensityOperator::Matrix m(dim, dim);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j, ++k)
      m(i, j) = {flat[static_cast<std::size_t>(k)][0].get<double>(),
                 flat[static_cast<std::size_t>(k)][1].get<double>()};
  return DensityOperator(std::move(modes), std::move(basis), std::move(m),
                         doc.at("truncation_deficit").get<double>());
}

}  // namespace rindler

#endif
