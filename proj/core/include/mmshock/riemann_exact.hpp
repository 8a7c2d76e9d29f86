#ifndef MMSHOCK_RIEMANN_EXACT_HPP
#define MMSHOCK_RIEMANN_EXACT_HPP

#include "mmshock/riemann_hllc.hpp"

namespace mmshock {

// Star region of the exact solution: common pressure and velocity between
// the outer waves, with the star density and wave character on each side.
struct StarRegion {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveKind wave_kind_left = WaveKind::rarefaction;  // shock iff p_star > p_left
  WaveKind wave_kind_right = WaveKind::rarefaction; // shock iff p_star > p_right
  int iterations = 0;
  double residual = 0.0; // f_L(p*) + f_R(p*) + (uR - uL)
};

struct SideFunction {
  double f = 0.0;     // m/s
  double df_dp = 0.0; // m/(s Pa)
};

// Velocity-jump function of one side and its pressure derivative, evaluated
// at candidate star pressure p. The stiffened gas reduces to the ideal-gas
// relations under the shift p -> p + p_inf:
//   shock (p > p_k):        f = (p - p_k) sqrt(A / (pt + B)),
//                           A = 2/((g+1) rho), B = (g-1)/(g+1) pt_k,
//   rarefaction (p <= p_k): f = 2c/(g-1) [ (pt/pt_k)^((g-1)/2g) - 1 ],
// where pt = p + p_inf, pt_k = p_k + p_inf.
SideFunction side_function(double p, const PrimitiveState& w, const EosParams& eos);

struct ExactSolveOptions {
  int max_iterations = 100;
  double rel_tol = 1e-14; // convergence on the pressure update
};

// Newton iteration with a maintained bracket and bisection fallback on the
// monotone pressure function f_L(p) + f_R(p) + (uR - uL). Initial guess is a
// two-rarefaction/linearised estimate clamped into the admissible domain
// p + min(p_inf) > 0. Throws vacuum_error when no admissible root exists and
// convergence_error when the iteration cap is hit.
StarRegion solve_star(const PrimitiveState& wL, const EosParams& eosL,
                      const PrimitiveState& wR, const EosParams& eosR,
                      const ExactSolveOptions& opts = {});

// Self-similar solution at speed xi = x/t, including interior rarefaction
// states from the isentrope of each side's EOS. xi >= u_star samples the
// right side of the contact.
PrimitiveState sample(const StarRegion& star, const PrimitiveState& wL, const EosParams& eosL,
                      const PrimitiveState& wR, const EosParams& eosR, double xi);

// Assemble the star region into a three-wave fan for the FVM. Shocks carry
// their exact speed; rarefactions carry the head/tail midpoint, with the
// true head/tail extents recorded in signal_min/signal_max.
RiemannFan exact_fan(const PrimitiveState& wL, const EosParams& eosL,
                     const PrimitiveState& wR, const EosParams& eosR,
                     const ExactSolveOptions& opts = {});

RiemannFan fan_from_star(const StarRegion& star, const PrimitiveState& wL, const EosParams& eosL,
                         const PrimitiveState& wR, const EosParams& eosR);

} // namespace mmshock

#endif
