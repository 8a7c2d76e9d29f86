#ifndef MMSHOCK_EOS_HPP
#define MMSHOCK_EOS_HPP

#include <array>
#include <string>

#include "mmshock/errors.hpp"

namespace mmshock {

// Stiffened-gas (Tammann) equation of state,
//
//     p = (gamma - 1) rho e - gamma p_inf,
//
// with p_inf = 0 recovering the ideal gas exactly. All quantities are SI.
// Invariants: gamma > 1, p_inf >= 0. A state is admissible for a given EOS
// when rho > 0 and p + p_inf > 0 (the latter keeps the sound speed real).
struct EosParams {
  double gamma = 1.4;
  double p_inf = 0.0; // Pa

  bool is_ideal_gas() const { return p_inf == 0.0; }
};

// Conserved variables per unit volume: density, momentum density, total
// energy density (internal + kinetic).
struct ConservedState {
  double rho = 0.0;  // kg/m^3
  double mom = 0.0;  // kg/(m^2 s)
  double ener = 0.0; // J/m^3
};

// Primitive variables: density, velocity, pressure.
struct PrimitiveState {
  double rho = 0.0; // kg/m^3
  double u = 0.0;   // m/s
  double p = 0.0;   // Pa
};

// A named material: EOS parameters plus the ambient reference density used
// when building layered scenarios.
struct Material {
  std::string name;
  EosParams eos;
  double rho_ref = 0.0; // kg/m^3 at ambient pressure
};

void validate(const EosParams& eos);
void validate(const PrimitiveState& w, const EosParams& eos);
void validate(const ConservedState& q, const EosParams& eos);

// p = (gamma-1)(ener - mom^2/(2 rho)) - gamma p_inf.
// Throws invalid_state_error on rho <= 0 or p + p_inf <= 0.
double pressure_from_conserved(const ConservedState& q, const EosParams& eos);

// ener = (p + gamma p_inf)/(gamma - 1) + rho u^2 / 2. Exact inverse of
// pressure_from_conserved.
ConservedState conserved_from_primitive(const PrimitiveState& w, const EosParams& eos);

PrimitiveState primitive_from_conserved(const ConservedState& q, const EosParams& eos);

// c = sqrt(gamma (p + p_inf) / rho)
double sound_speed(const PrimitiveState& w, const EosParams& eos);

// Specific internal energy e with rho e = (p + gamma p_inf)/(gamma - 1).
double specific_internal_energy(const PrimitiveState& w, const EosParams& eos);

// Euler flux (rho u, rho u^2 + p, u (E + p)) of a primitive state.
std::array<double, 3> flux(const PrimitiveState& w, const EosParams& eos);

// Euler flux of a conserved state with an explicitly supplied pressure.
// Used for intermediate Riemann states whose pressure is known (p_star)
// rather than implied by a single EOS.
std::array<double, 3> flux(const ConservedState& q, double p);

inline std::array<double, 3> to_array(const ConservedState& q) { return {q.rho, q.mom, q.ener}; }
inline ConservedState from_array(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

} // namespace mmshock

#endif
