#include "mmshock/riemann_hllc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmshock {

double RiemannFan::max_signal() const {
  return std::max(std::abs(signal_min), std::abs(signal_max));
}

std::array<Wave, 3> three_waves(const RiemannFan& fan) {
  auto jump = [](const ConservedState& a, const ConservedState& b) {
    return std::array<double, 3>{b.rho - a.rho, b.mom - a.mom, b.ener - a.ener};
  };
  return {Wave{jump(fan.q_left, fan.q_star_left), fan.s_left},
          Wave{jump(fan.q_star_left, fan.q_star_right), fan.s_star},
          Wave{jump(fan.q_star_right, fan.q_right), fan.s_right}};
}

std::pair<double, double> davis_speeds(const PrimitiveState& wL, const EosParams& eosL,
                                       const PrimitiveState& wR, const EosParams& eosR) {
  const double cL = sound_speed(wL, eosL);
  const double cR = sound_speed(wR, eosR);
  return {std::min(wL.u - cL, wR.u - cR), std::max(wL.u + cL, wR.u + cR)};
}

namespace {

ConservedState star_state(const ConservedState& q, const std::array<double, 3>& f, double sk,
                          double s_star, double p_star) {
  const double den = sk - s_star;
  if (den == 0.0)
    throw degenerate_error("HLLC star state: outer speed coincides with contact speed");
  return {(sk * q.rho - f[0]) / den,
          (sk * q.mom - f[1] + p_star) / den,
          (sk * q.ener - f[2] + p_star * s_star) / den};
}

} // namespace

RiemannFan hllc_solve(const PrimitiveState& wL, const EosParams& eosL,
                      const PrimitiveState& wR, const EosParams& eosR,
                      SpeedEstimate speeds) {
  validate(wL, eosL);
  validate(wR, eosR);

  // Zero-jump problem: all four states coincide and every wave has exactly
  // zero strength.
  if (wL.rho == wR.rho && wL.u == wR.u && wL.p == wR.p && eosL.gamma == eosR.gamma &&
      eosL.p_inf == eosR.p_inf) {
    const auto [sl0, sr0] = speeds(wL, eosL, wR, eosR);
    RiemannFan fan;
    fan.s_left = sl0;
    fan.s_star = wL.u;
    fan.s_right = sr0;
    fan.p_star = wL.p;
    fan.q_left = conserved_from_primitive(wL, eosL);
    fan.q_star_left = fan.q_left;
    fan.q_star_right = fan.q_left;
    fan.q_right = fan.q_left;
    fan.signal_min = sl0;
    fan.signal_max = sr0;
    return fan;
  }

  const auto [s_left, s_right] = speeds(wL, eosL, wR, eosR);
  const double mL = wL.rho * (s_left - wL.u);
  const double mR = wR.rho * (s_right - wR.u);
  const double den = mL - mR;
  if (den == 0.0) {
    std::ostringstream os;
    os << "HLLC degenerate speeds: S_L=" << s_left << " S_R=" << s_right;
    throw degenerate_error(os.str());
  }

  const double s_star = (wR.p - wL.p + wL.u * mL - wR.u * mR) / den;
  const double p_star = wL.p + mL * (s_star - wL.u);

  RiemannFan fan;
  fan.s_left = s_left;
  fan.s_star = s_star;
  fan.s_right = s_right;
  fan.p_star = p_star;
  fan.q_left = conserved_from_primitive(wL, eosL);
  fan.q_right = conserved_from_primitive(wR, eosR);
  fan.q_star_left = star_state(fan.q_left, flux(fan.q_left, wL.p), s_left, s_star, p_star);
  fan.q_star_right = star_state(fan.q_right, flux(fan.q_right, wR.p), s_right, s_star, p_star);
  fan.kind_left = WaveKind::bound;
  fan.kind_right = WaveKind::bound;
  fan.signal_min = s_left;
  fan.signal_max = s_right;
  return fan;
}

RiemannFan lagrangian_transform(const RiemannFan& fan) {
  RiemannFan out = fan;
  out.s_left = fan.s_left - fan.s_star;
  out.s_star = 0.0;
  out.s_right = fan.s_right - fan.s_star;
  out.signal_min = fan.signal_min - fan.s_star;
  out.signal_max = fan.signal_max - fan.s_star;
  return out;
}

} // namespace mmshock
