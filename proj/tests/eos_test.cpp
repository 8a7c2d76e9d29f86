#include <doctest.h>

#include <cmath>
#include <random>

#include "mmshock/eos.hpp"

using namespace mmshock;

namespace {
const EosParams kAir{1.4, 0.0};
const EosParams kWater{7.15, 3.0e8};
const EosParams kPlastic{1.1, 4.79e9};
} // namespace

TEST_CASE("pressure from conserved: air at rest") {
  // E = p/(gamma-1) for an ideal gas at rest.
  const ConservedState q{1.204, 0.0, 253312.5};
  CHECK(pressure_from_conserved(q, kAir) == doctest::Approx(101325.0).epsilon(1e-13));
}

TEST_CASE("pressure vanishes at the zero-pressure energy root") {
  for (const EosParams& eos : {kAir, kWater, kPlastic}) {
    const double rho_e = eos.gamma * eos.p_inf / (eos.gamma - 1.0);
    if (rho_e == 0.0) continue; // ideal gas: root sits on the invariant boundary
    const ConservedState q{1000.0, 0.0, rho_e};
    CHECK(std::abs(pressure_from_conserved(q, eos)) <= 1e-9 * eos.p_inf);
  }
}

TEST_CASE("water round trip at ambient") {
  const PrimitiveState w{1000.0, 0.0, 101325.0};
  const ConservedState q = conserved_from_primitive(w, kWater);
  CHECK(pressure_from_conserved(q, kWater) == doctest::Approx(101325.0).epsilon(1e-12));
}

TEST_CASE("conserved from primitive closed forms") {
  SUBCASE("ideal gas at rest: ener = p/(gamma-1)") {
    const ConservedState q = conserved_from_primitive({2.0, 0.0, 5.0e4}, kAir);
    CHECK(q.ener == doctest::Approx(5.0e4 / 0.4).epsilon(1e-14));
    CHECK(q.mom == 0.0);
  }
  SUBCASE("stiffened solid at rest") {
    const ConservedState q = conserved_from_primitive({1050.0, 0.0, 101325.0}, kPlastic);
    const double expected = (101325.0 + 1.1 * 4.79e9) / 0.1;
    CHECK(q.ener == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("round trip is the identity on randomized valid states") {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> unit(0.1, 10.0);
  std::uniform_real_distribution<double> vel(-500.0, 500.0);
  for (const EosParams& eos : {kAir, kWater, kPlastic}) {
    for (int i = 0; i < 500; ++i) {
      const PrimitiveState w{unit(rng) * 100.0, vel(rng),
                             unit(rng) * 1e5 - 0.5 * eos.p_inf * 1e-4};
      const ConservedState q = conserved_from_primitive(w, eos);
      const PrimitiveState back = primitive_from_conserved(q, eos);
      CHECK(back.rho == doctest::Approx(w.rho).epsilon(1e-12));
      CHECK(back.u == doctest::Approx(w.u).epsilon(1e-12).scale(1.0));
      CHECK(back.p == doctest::Approx(w.p).epsilon(1e-12).scale(w.p + eos.p_inf));
    }
  }
}

TEST_CASE("sound speeds of the reference materials") {
  CHECK(sound_speed({1.204, 0.0, 101325.0}, kAir) == doctest::Approx(344.0).epsilon(0.01));
  CHECK(sound_speed({1000.0, 0.0, 101325.0}, kWater) ==
        doctest::Approx(std::sqrt(7.15 * (101325.0 + 3.0e8) / 1000.0)).epsilon(1e-14));
  CHECK(sound_speed({1000.0, 0.0, 101325.0}, kWater) == doctest::Approx(1465.0).epsilon(2e-3));
}

TEST_CASE("p_inf = 0 reduces to the ideal gas") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(0.2, 5.0);
  for (int i = 0; i < 200; ++i) {
    const PrimitiveState w{d(rng), 10.0 * d(rng), 1e5 * d(rng)};
    CHECK(sound_speed(w, kAir) ==
          doctest::Approx(std::sqrt(1.4 * w.p / w.rho)).epsilon(1e-14));
    const ConservedState q = conserved_from_primitive(w, kAir);
    CHECK(q.ener ==
          doctest::Approx(w.p / 0.4 + 0.5 * w.rho * w.u * w.u).epsilon(1e-14));
  }
}

TEST_CASE("sound speed monotonicity") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> d(0.5, 2.0);
  for (const EosParams& eos : {kAir, kWater}) {
    for (int i = 0; i < 200; ++i) {
      const double rho = 800.0 * d(rng);
      const double p = 2e5 * d(rng);
      const double c0 = sound_speed({rho, 0.0, p}, eos);
      CHECK(sound_speed({rho, 0.0, p * 1.01}, eos) > c0);
      CHECK(sound_speed({rho * 1.01, 0.0, p}, eos) < c0);
      EosParams stiffer = eos;
      stiffer.p_inf += 1e5;
      CHECK(sound_speed({rho, 0.0, p}, stiffer) > c0);
    }
  }
}

TEST_CASE("invalid states are rejected eagerly") {
  CHECK_THROWS_AS((void)pressure_from_conserved({-1.0, 0.0, 1e5}, kAir), invalid_state_error);
  CHECK_THROWS_AS((void)pressure_from_conserved({1.0, 0.0, -1e5}, kAir), invalid_state_error);
  // Kinetic energy exceeding the total leaves negative internal energy.
  CHECK_THROWS_AS((void)pressure_from_conserved({1.0, 1e4, 1e5}, kAir), invalid_state_error);
  CHECK_THROWS_AS((void)conserved_from_primitive({1.0, 0.0, -2e5}, kAir), invalid_state_error);
  CHECK_THROWS_AS((void)sound_speed({1000.0, 0.0, -3.1e8}, kWater), invalid_state_error);
  CHECK_THROWS_AS(validate(EosParams{1.0, 0.0}), invalid_state_error);
  CHECK_THROWS_AS(validate(EosParams{1.4, -1.0}), invalid_state_error);
}
