#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "rindler/teleport.hpp"
#include "test_helpers.hpp"

using namespace rindler;
using Complex = std::complex<double>;

TEST_SUITE_BEGIN("teleport");

namespace {

LogicalQubit random_qubit(std::mt19937& rng) {
  return LogicalQubit::normalized(test::random_amplitude(rng), test::random_amplitude(rng));
}

/// Fermionic analogue of the brute-force route: expand x|0>_M + y|1>_M over
/// the four fermionic Rindler modes and trace out region II.
DensityOperator receiver_state_fermionic_bruteforce(const ConditionalAmplitudes& amps, double r) {
  const ModePair pair_1 = ModePair::fermionic("R1");
  const ModePair pair_2 = ModePair::fermionic("R2");
  const auto logical_zero =
      tensor(fermionic_one_particle(r, pair_1), fermionic_vacuum(r, pair_2));
  const auto logical_one =
      tensor(fermionic_vacuum(r, pair_1), fermionic_one_particle(r, pair_2));
  const auto phi = superpose(amps.x, logical_zero, amps.y, logical_one);
  return partial_trace(density_from_pure(phi), {pair_1.region_I, pair_2.region_I});
}

}  // namespace

TEST_CASE("conditional amplitude table") {
  auto rng = test::make_rng(31);
  const auto psi = random_qubit(rng);
  const auto a = psi.alpha, b = psi.beta;

  const auto t00 = conditional_amplitudes(psi, {0, 0});
  CHECK(t00.x == a);
  CHECK(t00.y == b);
  const auto t01 = conditional_amplitudes(psi, {0, 1});
  CHECK(t01.x == b);
  CHECK(t01.y == a);
  const auto t10 = conditional_amplitudes(psi, {1, 0});
  CHECK(t10.x == a);
  CHECK(t10.y == -b);
  const auto t11 = conditional_amplitudes(psi, {1, 1});
  CHECK(t11.x == -b);
  CHECK(t11.y == a);

  for (const auto outcome : BellOutcome::all()) {
    const auto amps = conditional_amplitudes(psi, outcome);
    CHECK(std::norm(amps.x) + std::norm(amps.y) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("Bell resource is the four-mode single-excitation pair state") {
  const auto sender = DualRailEncoding::of("A", Statistics::bosonic);
  const auto receiver = DualRailEncoding::of("R", Statistics::bosonic);
  const auto bell = bell_resource(sender, receiver);
  CHECK(bell.support_size() == 2);
  CHECK(bell.amplitude({1, 0, 1, 0}).real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(bell.amplitude({0, 1, 0, 1}).real() == doctest::Approx(1 / std::sqrt(2.0)));

  // either party's reduced state is the maximally mixed logical qubit
  const auto rho = density_from_pure(bell);
  for (const auto& party : {sender, receiver}) {
    const auto reduced = partial_trace(rho, {party.mode_1, party.mode_2});
    CHECK(reduced.entry({1, 0}, {1, 0}).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(reduced.entry({0, 1}, {0, 1}).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(reduced.entry({1, 0}, {0, 1})) < 1e-15);
  }

  CHECK_THROWS_AS(bell_resource(sender, sender), std::invalid_argument);
}

TEST_CASE("logical Bell measurement is uniform and reproduces the table") {
  auto rng = test::make_rng(37);
  for (int trial = 0; trial < 8; ++trial) {
    const auto psi = random_qubit(rng);
    for (const auto outcome : BellOutcome::all()) {
      const auto measured = bell_measurement(psi, outcome);
      CHECK(measured.probability == doctest::Approx(0.25).epsilon(1e-12));
      const auto expected = conditional_amplitudes(psi, outcome);
      CHECK(std::abs(measured.amplitudes.x - expected.x) < 1e-12);
      CHECK(std::abs(measured.amplitudes.y - expected.y) < 1e-12);
    }
  }
}

TEST_CASE("closed-form receiver state at r = 0 is the pure conditional state") {
  auto rng = test::make_rng(41);
  const auto psi = random_qubit(rng);
  const auto amps = conditional_amplitudes(psi, {1, 0});
  const auto rho = receiver_state_bosonic_closed(amps, 0.0, 6);

  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rho.entry({1, 0}, {1, 0}).real() == doctest::Approx(std::norm(amps.x)).epsilon(1e-13));
  CHECK(rho.entry({0, 1}, {0, 1}).real() == doctest::Approx(std::norm(amps.y)).epsilon(1e-13));
  CHECK(std::abs(rho.entry({1, 0}, {0, 1}) - amps.x * std::conj(amps.y)) < 1e-14);
  // purity: the single populated sector is a pure state
  CHECK((rho.matrix() * rho.matrix()).trace().real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("two-excitation block carries the expected entries") {
  auto rng = test::make_rng(43);
  const auto psi = random_qubit(rng);
  const auto amps = conditional_amplitudes(psi, {0, 0});
  const double r = 0.5;
  const auto rho = receiver_state_bosonic_closed(amps, r, 10);

  const double xi = std::tanh(r) * std::tanh(r);
  const double w = xi / std::pow(std::cosh(r), 6.0);  // sector-2 weight scale
  const double x2 = std::norm(amps.x), y2 = std::norm(amps.y);
  const Complex xy = amps.x * std::conj(amps.y);

  // reading the sector with occupations of the first mode descending
  // reproduces the printed diag(2|x|^2, 1, 2|y|^2) / sqrt(2) x y* pattern
  CHECK(rho.entry({2, 0}, {2, 0}).real() == doctest::Approx(2 * x2 * w).epsilon(1e-12));
  CHECK(rho.entry({1, 1}, {1, 1}).real() == doctest::Approx((x2 + y2) * w).epsilon(1e-12));
  CHECK(rho.entry({0, 2}, {0, 2}).real() == doctest::Approx(2 * y2 * w).epsilon(1e-12));
  CHECK(std::abs(rho.entry({2, 0}, {1, 1}) - std::sqrt(2.0) * xy * w) < 1e-13);
  CHECK(std::abs(rho.entry({1, 1}, {0, 2}) - std::sqrt(2.0) * xy * w) < 1e-13);
  CHECK(rho.entry({2, 0}, {0, 2}) == Complex(0.0));
}

TEST_CASE("sector weights follow the multiplicity-corrected law") {
  const double r = 1.0;
  const int n_max = 40;
  const auto rho =
      receiver_state_bosonic_closed({Complex(1 / std::sqrt(2.0)), Complex(1 / std::sqrt(2.0))},
                                    r, n_max);
  const double xi = std::tanh(r) * std::tanh(r);
  const double w1 = std::pow(1.0 - xi, 3.0);

  const auto weights = sector_weights(rho);
  CHECK(weights[0].weight == 0.0);
  CHECK(weights[1].weight == doctest::Approx(1.0 / std::pow(std::cosh(r), 6.0)).epsilon(1e-12));
  for (int n = 1; n <= 10; ++n) {
    CHECK(weights[static_cast<std::size_t>(n)].weight ==
          doctest::Approx(n * (n + 1) / 2.0 * std::pow(xi, n - 1.0) * w1).epsilon(1e-11));
  }

  // series identity oracle: sum_n n(n+1)/2 xi^(n-1) = (1-xi)^-3
  double partial = 0.0;
  for (int n = 1; n <= n_max; ++n) partial += n * (n + 1) / 2.0 * std::pow(xi, n - 1.0);
  CHECK(rho.trace() == doctest::Approx(w1 * partial).epsilon(1e-12));
  CHECK(rho.truncation_deficit() == doctest::Approx(1.0 - w1 * partial).epsilon(1e-9));

  // the n = 1 weight is the receiver's chance of finding no thermal photons
  const auto post = postselect_sector(rho, 1);
  CHECK(post.probability ==
        doctest::Approx(weights[1].weight / rho.trace()).epsilon(1e-12));
  CHECK((post.state.matrix() * post.state.matrix()).trace().real() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("brute-force route agrees with the closed form") {
  auto rng = test::make_rng(47);
  std::vector<LogicalQubit> qubits{LogicalQubit::plus()};
  for (int i = 0; i < 4; ++i) qubits.push_back(random_qubit(rng));

  for (double r : {0.0, 0.25, 0.5, 1.0, 2.0}) {
    for (const auto& psi : qubits) {
      for (const auto outcome : BellOutcome::all()) {
        const auto amps = conditional_amplitudes(psi, outcome);
        const auto closed = receiver_state_bosonic_closed(amps, r, 30);
        const auto brute = receiver_state_bosonic_bruteforce(amps, r, 30);
        CHECK(test::max_entry_diff(closed, brute, 12) < 1e-10);
      }
    }
  }

  // one full-depth comparison across every sector both routes cover; the
  // brute-force route keeps (decaying) weight in sectors past the closed
  // form's total-excitation cap, so the comparison stops at that cap
  const auto amps = conditional_amplitudes(qubits[1], {0, 1});
  CHECK(test::max_entry_diff(receiver_state_bosonic_closed(amps, 1.0, 30),
                             receiver_state_bosonic_bruteforce(amps, 1.0, 30), 30) < 1e-10);
}

TEST_CASE("brute-force route keeps cross-sector elements exactly zero") {
  const auto brute = receiver_state_bosonic_bruteforce(
      {Complex(0.6), Complex(0.8)}, 0.8, 14);
  for (const auto& row : brute.basis()) {
    for (const auto& col : brute.basis()) {
      if (row.total_excitation() != col.total_excitation()) {
        CHECK(brute.entry(row, col) == Complex(0.0));
      }
    }
  }

  // y = 0 kills every coherence
  const auto no_coherence = receiver_state_bosonic_bruteforce({Complex(1.0), Complex(0.0)}, 0.5, 10);
  for (const auto& row : no_coherence.basis())
    for (const auto& col : no_coherence.basis())
      if (!(row == col)) CHECK(std::abs(no_coherence.entry(row, col)) == 0.0);
}

TEST_CASE("fermionic receiver state matches the closed form and brute force") {
  auto rng = test::make_rng(53);
  const double quarter = std::numbers::pi / 4;

  const auto psi = random_qubit(rng);
  const auto amps = conditional_amplitudes(psi, {0, 0});

  const auto pure = receiver_state_fermionic(amps, 0.0);
  CHECK((pure.matrix() * pure.matrix()).trace().real() == doctest::Approx(1.0).epsilon(1e-13));

  const auto saturated = receiver_state_fermionic(amps, quarter);
  CHECK(saturated.entry({1, 1}, {1, 1}).real() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(saturated.entry({1, 0}, {1, 0}).real() ==
        doctest::Approx(0.5 * std::norm(amps.x)).epsilon(1e-13));
  CHECK(saturated.trace() == doctest::Approx(1.0).epsilon(1e-14));

  for (double r : {0.0, 0.2, 0.5, quarter}) {
    for (const auto outcome : BellOutcome::all()) {
      const auto a = conditional_amplitudes(psi, outcome);
      CHECK(test::max_entry_diff(receiver_state_fermionic(a, r),
                                 receiver_state_fermionic_bruteforce(a, r)) < 1e-14);
    }
  }

  const auto weights = sector_weights(receiver_state_fermionic(amps, 0.3));
  CHECK(weights[1].weight == doctest::Approx(std::cos(0.3) * std::cos(0.3)).epsilon(1e-14));
  CHECK(weights[2].weight == doctest::Approx(std::sin(0.3) * std::sin(0.3)).epsilon(1e-14));
}

TEST_CASE("Pauli corrections rotate the logical sector") {
  auto rng = test::make_rng(59);
  const auto psi = random_qubit(rng);
  const auto encoding = receiver_region_I_encoding(Statistics::bosonic);

  for (const auto outcome : BellOutcome::all()) {
    const auto amps = conditional_amplitudes(psi, outcome);
    const auto rho = receiver_state_bosonic_closed(amps, 0.0, 4);
    const auto corrected = apply_correction(rho, outcome);
    const auto target = dual_rail_state(psi.alpha, psi.beta, encoding, 4);
    CHECK(fidelity_pure(target, corrected) == doctest::Approx(1.0).epsilon(1e-12));
  }

  // outcome (0,0) is a no-op
  const auto rho = receiver_state_bosonic_closed(conditional_amplitudes(psi, {0, 0}), 0.7, 8);
  CHECK(test::max_entry_diff(rho, apply_correction(rho, {0, 0})) == 0.0);

  // X alone is an involution
  const auto once = apply_correction(rho, {0, 1});
  CHECK(test::max_entry_diff(rho, apply_correction(once, {0, 1})) < 1e-15);

  // unitarity: the eigenvalue multiset is preserved
  const auto mixed = receiver_state_bosonic_closed(conditional_amplitudes(psi, {1, 1}), 0.9, 10);
  const auto rotated = apply_correction(mixed, {1, 1});
  const auto before = eigenvalues_sorted(mixed);
  const auto after = eigenvalues_sorted(rotated);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i)
    CHECK(std::abs(before[i] - after[i]) < 1e-12);
}

TEST_CASE("teleportation fidelity laws") {
  auto rng = test::make_rng(61);

  CHECK(teleport_fidelity(Statistics::bosonic, 0.0, LogicalQubit::plus(), 8).tail_corrected ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(teleport_fidelity(Statistics::fermionic, 0.0, LogicalQubit::plus(), 2).tail_corrected ==
        doctest::Approx(1.0).epsilon(1e-13));

  // near-unity regime: 1 - F = 1 - 1/cosh^6(1e-3) ~ 3e-6
  const double near = teleport_fidelity(Statistics::bosonic, 1e-3, LogicalQubit::plus(), 8)
                          .tail_corrected;
  CHECK(1.0 - near > 2e-6);
  CHECK(1.0 - near < 4e-6);

  const double quarter = std::numbers::pi / 4;
  CHECK(teleport_fidelity(Statistics::fermionic, quarter, LogicalQubit::plus(), 2).tail_corrected ==
        doctest::Approx(0.5).epsilon(1e-13));

  // pipeline equals the closed-form laws and is independent of psi and (i,j)
  for (double r : {0.1, 0.6, 1.4}) {
    double lo = 2.0, hi = -1.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto psi = random_qubit(rng);
      for (const auto outcome : BellOutcome::all()) {
        const double f =
            teleport_fidelity(Statistics::bosonic, r, psi, 24, outcome).tail_corrected;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
      }
    }
    CHECK(hi - lo < 1e-10);
    CHECK(hi == doctest::Approx(teleport_fidelity_closed_form(Statistics::bosonic, r))
                    .epsilon(1e-9));
  }

  for (double r = 0.0; r <= quarter + 1e-9; r += quarter / 10) {
    const auto psi = random_qubit(rng);
    CHECK(std::abs(teleport_fidelity(Statistics::fermionic, r, psi, 2, {1, 0}).tail_corrected -
                   teleport_fidelity_closed_form(Statistics::fermionic, r)) < 1e-12);
  }
}

TEST_SUITE_END();
