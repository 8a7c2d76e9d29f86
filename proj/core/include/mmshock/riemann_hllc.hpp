#ifndef MMSHOCK_RIEMANN_HLLC_HPP
#define MMSHOCK_RIEMANN_HLLC_HPP

#include <utility>

#include "mmshock/eos.hpp"

namespace mmshock {

enum class WaveKind { shock, rarefaction, bound };

// Three-wave Riemann fan: outer wave speeds s_left/s_right, contact speed
// s_star, and the four constant states with the common star pressure.
// signal_min/signal_max are the extreme characteristic speeds of the fan
// (rarefaction heads included) and drive the CFL condition; for approximate
// fans they coincide with s_left/s_right.
struct RiemannFan {
  double s_left = 0.0;
  double s_star = 0.0;
  double s_right = 0.0;
  ConservedState q_left, q_star_left, q_star_right, q_right;
  double p_star = 0.0;
  WaveKind kind_left = WaveKind::bound;
  WaveKind kind_right = WaveKind::bound;
  double signal_min = 0.0;
  double signal_max = 0.0;

  double max_signal() const;
};

// One wave of the three-jump decomposition: a state jump propagating at a
// single speed.
struct Wave {
  std::array<double, 3> dq{0.0, 0.0, 0.0};
  double speed = 0.0;
};

// W1 = Q*L - QL at s_left, W2 = Q*R - Q*L at s_star, W3 = QR - Q*R at s_right.
std::array<Wave, 3> three_waves(const RiemannFan& fan);

// Injectable outer wave-speed estimate.
using SpeedEstimate = std::pair<double, double> (*)(const PrimitiveState&, const EosParams&,
                                                    const PrimitiveState&, const EosParams&);

// Davis bounds: S_L = min(uL - cL, uR - cR), S_R = max(uL + cL, uR + cR),
// each sound speed computed with its own side's EOS.
std::pair<double, double> davis_speeds(const PrimitiveState& wL, const EosParams& eosL,
                                       const PrimitiveState& wR, const EosParams& eosR);

// HLLC approximate solver with possibly different EOS parameters per side.
// Star states follow Q*k = (S_k Q_k - F_k + p* D)/(S_k - S*), D = (0,1,S*),
// which makes F(Q*k) - F(Q_k) = S_k (Q*k - Q_k) hold per outer wave when the
// star fluxes are evaluated with p_star.
RiemannFan hllc_solve(const PrimitiveState& wL, const EosParams& eosL,
                      const PrimitiveState& wR, const EosParams& eosR,
                      SpeedEstimate speeds = &davis_speeds);

// Shift to the frame moving with the contact: speeds become s - s_star,
// s_star becomes exactly 0, states and p_star are untouched.
RiemannFan lagrangian_transform(const RiemannFan& fan);

} // namespace mmshock

#endif
