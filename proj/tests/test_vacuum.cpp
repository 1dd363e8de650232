#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rindler/vacuum.hpp"
#include "test_helpers.hpp"

using namespace rindler;
using Complex = std::complex<double>;

TEST_SUITE_BEGIN("vacuum");

namespace {
const ModePair kBosonPair = ModePair::bosonic("R1");
const ModePair kFermionPair = ModePair::fermionic("R1");
}  // namespace

TEST_CASE("bosonic vacuum is the two-mode squeezed state") {
  auto flat = bosonic_vacuum(0.0, kBosonPair, 8);
  CHECK(flat.support_size() == 1);
  CHECK(flat.amplitude({0, 0}) == Complex(1.0));

  const double r = 0.9;
  const int n_max = 24;
  auto vac = bosonic_vacuum(r, kBosonPair, n_max);
  const double t = std::tanh(r);
  for (int n = 0; n + 1 <= n_max; ++n) {
    CHECK(vac.amplitude({n + 1, n + 1}).real() / vac.amplitude({n, n}).real() ==
          doctest::Approx(t).epsilon(1e-13));
    CHECK(vac.amplitude({n + 1, n}) == Complex(0.0));  // only paired occupations
  }

  // geometric-series oracle for the truncated norm
  double series = 0.0;
  const double xi = t * t;
  for (int n = 0; n <= n_max; ++n) series += std::pow(xi, n);
  series *= 1.0 - xi;
  CHECK(vac.squared_norm() == doctest::Approx(series).epsilon(1e-13));
  CHECK(vac.squared_norm() == doctest::Approx(1.0 - std::pow(xi, n_max + 1)).epsilon(1e-13));
  CHECK(vac.truncation_deficit() == doctest::Approx(std::pow(xi, n_max + 1)).epsilon(1e-13));

  CHECK_THROWS_AS(bosonic_vacuum(-0.1, kBosonPair, 4), std::invalid_argument);
}

TEST_CASE("bosonic one-particle state matches its series and norm oracle") {
  auto flat = bosonic_one_particle(0.0, kBosonPair, 8);
  CHECK(flat.support_size() == 1);
  CHECK(flat.amplitude({1, 0}) == Complex(1.0));

  const double r = 0.7;
  const int n_max = 30;
  auto one = bosonic_one_particle(r, kBosonPair, n_max);
  const double t = std::tanh(r), xi = t * t;
  const double sech2 = 1.0 / (std::cosh(r) * std::cosh(r));
  for (int n = 0; n + 1 <= n_max; ++n) {
    CHECK(one.amplitude({n + 1, n}).real() ==
          doctest::Approx(std::pow(t, n) * std::sqrt(n + 1.0) * sech2).epsilon(1e-12));
  }

  // partial-sum oracle for sum (n+1) xi^n / cosh^4
  double series = 0.0;
  for (int n = 0; n + 1 <= n_max; ++n) series += (n + 1.0) * std::pow(xi, n);
  series *= sech2 * sech2;
  CHECK(one.squared_norm() == doctest::Approx(series).epsilon(1e-12));
  CHECK(one.truncation_deficit() == doctest::Approx(1.0 - series).epsilon(1e-9));
}

TEST_CASE("transformed creation operator maps the vacuum to the one-particle state") {
  for (double r : {0.2, 0.6, 1.1}) {
    const int n_max = 28;
    auto vac = bosonic_vacuum(r, kBosonPair, n_max);
    auto transformed = superpose(Complex(std::cosh(r)), apply_creation(vac, kBosonPair.region_I),
                                 Complex(-std::sinh(r)),
                                 apply_annihilation(vac, kBosonPair.region_II));
    auto one = bosonic_one_particle(r, kBosonPair, n_max);
    CHECK(test::max_state_diff(transformed, one) < 1e-12);
  }
}

TEST_CASE("fermionic vacuum has exactly two components") {
  auto flat = fermionic_vacuum(0.0, kFermionPair);
  CHECK(flat.support_size() == 1);
  CHECK(flat.amplitude({0, 0}) == Complex(1.0));

  const double quarter = std::numbers::pi / 4;
  auto saturated = fermionic_vacuum(quarter, kFermionPair);
  CHECK(saturated.amplitude({0, 0}).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(saturated.amplitude({1, 1}).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));

  for (double r = 0.0; r <= quarter; r += 0.1) {
    CHECK(fermionic_vacuum(r, kFermionPair).squared_norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(fermionic_vacuum(1.0, kFermionPair), std::invalid_argument);
}

TEST_CASE("fermionic one-particle state is |1,0> for every r") {
  for (double r : {0.0, 0.3, std::numbers::pi / 4}) {
    auto one = fermionic_one_particle(r, kFermionPair);
    CHECK(one.support_size() == 1);
    CHECK(one.amplitude({1, 0}) == Complex(1.0));

    // a_M^dag = cos r c_I^dag + sin r c_II applied to the vacuum
    auto vac = fermionic_vacuum(r, kFermionPair);
    auto transformed =
        superpose(Complex(std::cos(r)), apply_creation(vac, kFermionPair.region_I),
                  Complex(std::sin(r)), apply_annihilation(vac, kFermionPair.region_II));
    CHECK(test::max_state_diff(transformed, one) < 1e-14);

    // a second application annihilates it (Pauli exclusion)
    auto twice = superpose(Complex(std::cos(r)), apply_creation(transformed, kFermionPair.region_I),
                           Complex(std::sin(r)),
                           apply_annihilation(transformed, kFermionPair.region_II));
    CHECK(twice.squared_norm() < 1e-28);
  }
}

TEST_CASE("bosonic thermal reduction matches the partial-trace route") {
  CHECK(thermal_reduction_bosonic(0.0, 4).matrix()(0, 0).real() == 1.0);

  for (double r : {0.3, 0.8, 1.5}) {
    const int n_max = TruncationConfig::for_squeeze(r, 1e-14).n_max;
    auto direct = thermal_reduction_bosonic(r, n_max, kBosonPair.region_I);
    auto traced =
        partial_trace(density_from_pure(bosonic_vacuum(r, kBosonPair, n_max)),
                      {kBosonPair.region_I});
    CHECK(test::max_entry_diff(direct, traced) < 1e-12);

    const double xi = std::tanh(r) * std::tanh(r);
    for (int n = 0; n <= n_max; ++n) {
      CHECK(direct.matrix()(n, n).real() ==
            doctest::Approx((1.0 - xi) * std::pow(xi, n)).epsilon(1e-12));
    }

    // mean occupancy: the Bose-Einstein value xi/(1-xi) = 1/(e^{2 pi Omega}-1)
    double mean = 0.0;
    for (int n = 0; n <= n_max; ++n) mean += n * direct.matrix()(n, n).real();
    CHECK(mean == doctest::Approx(xi / (1.0 - xi)).epsilon(1e-9));
  }
}

TEST_CASE("fermionic thermal reduction is diag(cos^2 r, sin^2 r)") {
  auto flat = thermal_reduction_fermionic(0.0);
  CHECK(flat.matrix()(0, 0).real() == 1.0);
  CHECK(flat.matrix()(1, 1).real() == 0.0);

  auto saturated = thermal_reduction_fermionic(std::numbers::pi / 4);
  CHECK(saturated.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(saturated.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));

  for (double r : {0.2, 0.5, 0.78}) {
    auto direct = thermal_reduction_fermionic(r, kFermionPair.region_I);
    auto traced = partial_trace(density_from_pure(fermionic_vacuum(r, kFermionPair)),
                                {kFermionPair.region_I});
    CHECK(test::max_entry_diff(direct, traced) == 0.0);  // identical arithmetic

    // entropy oracle: binary entropy of sin^2 r
    const double s2 = std::sin(r) * std::sin(r);
    const double binary = -s2 * std::log2(s2) - (1 - s2) * std::log2(1 - s2);
    CHECK(von_neumann_entropy(direct) == doctest::Approx(binary).epsilon(1e-12));
  }
}

TEST_CASE("thermal reductions are fixed points of tracing over nothing") {
  auto bosonic = thermal_reduction_bosonic(0.8, 16);
  auto fixed = partial_trace(bosonic, bosonic.modes());
  CHECK(test::max_entry_diff(bosonic, fixed) == 0.0);
  CHECK(bosonic.trace() == doctest::Approx(1.0 - bosonic.truncation_deficit()).epsilon(1e-12));

  auto fermionic = thermal_reduction_fermionic(0.4);
  CHECK(fermionic.trace() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("mode pairs validate their labels") {
  CHECK_THROWS_AS((ModePair{{"x", Statistics::bosonic}, {"x", Statistics::bosonic},
                            Statistics::bosonic})
                      .validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(bosonic_vacuum(0.5, kFermionPair, 4), std::invalid_argument);
}

TEST_SUITE_END();
