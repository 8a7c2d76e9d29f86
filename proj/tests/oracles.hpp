// Independent verification oracles used by the unit and acceptance suites.
// Everything here is deliberately brute force (ODE integration, bisection,
// quadrature) and shares no code path with the solvers under test beyond the
// EOS algebra itself.
#ifndef MMSHOCK_TEST_ORACLES_HPP
#define MMSHOCK_TEST_ORACLES_HPP

#include <array>

#include "mmshock/riemann_exact.hpp"

namespace mmshock::oracles {

// Velocity jump across a shock from upstream (w, eos) to downstream pressure
// p2, found by bisecting the Rankine-Hugoniot energy relation
//   e2 - e1 = (p1 + p2)/2 (1/rho1 - 1/rho2)
// in rho2 and applying the mass/momentum jump conditions. Also returns the
// downstream density.
struct ShockJump {
  double du;
  double rho2;
};
ShockJump shock_jump_bruteforce(const PrimitiveState& w, const EosParams& eos, double p2);

// Velocity change along the isentrope from (w.p) down to p2 <= w.p, by RK4
// integration of drho/dp = 1/c^2 and du/dp = 1/(rho c); returns the jump
// magnitude matching the rarefaction branch convention and the end density.
struct IsentropeRun {
  double du;
  double rho2;
};
IsentropeRun isentrope_bruteforce(const PrimitiveState& w, const EosParams& eos, double p2,
                                  int steps = 20000);

// Star pressure by plain bisection on f_L + f_R + (uR - uL).
double bisect_star_pressure(const PrimitiveState& wL, const EosParams& eosL,
                            const PrimitiveState& wR, const EosParams& eosR,
                            double rel_tol = 1e-13);

// Exact cell average of the self-similar solution over [-X, X] at time T:
// constant regions integrated exactly, rarefaction fans with Gauss panels.
std::array<double, 3> fan_average(const StarRegion& star, const PrimitiveState& wL,
                                  const EosParams& eosL, const PrimitiveState& wR,
                                  const EosParams& eosR, double half_width, double time);

// Centered finite difference of the side function value.
double side_function_fd(double p, const PrimitiveState& w, const EosParams& eos, double h);

} // namespace mmshock::oracles

#endif
