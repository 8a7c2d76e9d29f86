#include "mmshock/riemann_exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmshock {

namespace {

// Pressure shifted by the stiffness constant; the solver-relevant quantity.
inline double eff(double p, const EosParams& eos) { return p + eos.p_inf; }

struct Side {
  PrimitiveState w;
  EosParams eos;
  double c;  // sound speed
  double pt; // effective pressure of the side state
};

Side make_side(const PrimitiveState& w, const EosParams& eos) {
  return {w, eos, sound_speed(w, eos), eff(w.p, eos)};
}

double shock_speed(const Side& s, double p_star, int sign) {
  const double g = s.eos.gamma;
  const double ratio = eff(p_star, s.eos) / s.pt;
  const double q = s.c * std::sqrt((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g));
  return s.w.u + sign * q;
}

double star_density(const Side& s, double p_star, WaveKind kind) {
  const double g = s.eos.gamma;
  const double r = eff(p_star, s.eos) / s.pt;
  if (kind == WaveKind::shock) {
    const double b = (g - 1.0) / (g + 1.0);
    return s.w.rho * (r + b) / (b * r + 1.0);
  }
  return s.w.rho * std::pow(r, 1.0 / g);
}

// State inside a rarefaction fan at similarity speed xi. sign = -1 for the
// left (u - c) fan, +1 for the right (u + c) fan.
PrimitiveState fan_state(const Side& s, double xi, int sign) {
  const double g = s.eos.gamma;
  const double c = 2.0 / (g + 1.0) * (s.c - sign * 0.5 * (g - 1.0) * (s.w.u - xi));
  const double u = xi - sign * c;
  const double pt = s.pt * std::pow(c / s.c, 2.0 * g / (g - 1.0));
  const double rho = g * pt / (c * c);
  return {rho, u, pt - s.eos.p_inf};
}

} // namespace

SideFunction side_function(double p, const PrimitiveState& w, const EosParams& eos) {
  validate(w, eos);
  if (!(eff(p, eos) > 0.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "side_function: p + p_inf must be positive, got p=" << p << " p_inf=" << eos.p_inf;
    throw invalid_state_error(os.str());
  }

  const double g = eos.gamma;
  const double pt_k = eff(w.p, eos);
  const double pt = eff(p, eos);
  SideFunction out;
  if (p > w.p) {
    const double a = 2.0 / ((g + 1.0) * w.rho);
    const double b = (g - 1.0) / (g + 1.0) * pt_k;
    const double den = pt + b;
    const double root = std::sqrt(a / den);
    out.f = (p - w.p) * root;
    out.df_dp = root * (1.0 - 0.5 * (p - w.p) / den);
  } else {
    const double c = std::sqrt(g * pt_k / w.rho);
    const double e = (g - 1.0) / (2.0 * g);
    out.f = 2.0 * c / (g - 1.0) * (std::pow(pt / pt_k, e) - 1.0);
    out.df_dp = std::pow(pt / pt_k, -(g + 1.0) / (2.0 * g)) / (w.rho * c);
  }
  return out;
}

StarRegion solve_star(const PrimitiveState& wL, const EosParams& eosL,
                      const PrimitiveState& wR, const EosParams& eosR,
                      const ExactSolveOptions& opts) {
  const Side L = make_side(wL, eosL);
  const Side R = make_side(wR, eosR);
  const double du = wR.u - wL.u;

  StarRegion star;
  star.rho_star_left = wL.rho;
  star.rho_star_right = wR.rho;

  // Zero-jump root: equal pressure and velocity already solve the problem
  // exactly, for any density or EOS contrast across the edge.
  if (wL.p == wR.p && wL.u == wR.u) {
    star.p_star = wL.p;
    star.u_star = wL.u;
    star.wave_kind_left = WaveKind::rarefaction;
    star.wave_kind_right = WaveKind::rarefaction;
    return star;
  }

  const double p_floor = -std::min(eosL.p_inf, eosR.p_inf);
  const double p_scale = std::max(L.pt, R.pt);

  auto residual_at = [&](double p) {
    return side_function(p, wL, eosL).f + side_function(p, wR, eosR).f + du;
  };

  // Vacuum check at the admissible lower end of the pressure domain.
  const double p_lo0 = p_floor + 1e-12 * p_scale;
  if (residual_at(p_lo0) >= 0.0) {
    std::ostringstream os;
    os << "vacuum-generating data: uR - uL = " << du << " exceeds the available expansion";
    throw vacuum_error(os.str());
  }

  // Initial guess: the two-rarefaction approximation on the stiffened-gas
  // isentropes whenever the stiffness constants agree (a mean exponent
  // covers mixed gammas); otherwise a linearised estimate. Clamped into the
  // admissible domain.
  double p = 0.5 * (wL.p + wR.p) - 0.125 * du * (wL.rho + wR.rho) * (L.c + R.c);
  if (eosL.p_inf == eosR.p_inf) {
    const double g = 0.5 * (eosL.gamma + eosR.gamma);
    const double z = (g - 1.0) / (2.0 * g);
    const double num = L.c + R.c - 0.5 * (g - 1.0) * du;
    const double den = L.c / std::pow(L.pt, z) + R.c / std::pow(R.pt, z);
    if (num > 0.0 && den > 0.0)
      p = std::pow(num / den, 1.0 / z) - eosL.p_inf;
  }
  p = std::max(p, p_floor + 1e-10 * p_scale);

  // Bracket the root; the residual is strictly increasing in p.
  double lo = p_lo0;
  double hi = std::max(p, std::max(wL.p, wR.p));
  double r_hi = residual_at(hi);
  int expand = 0;
  while (r_hi < 0.0) {
    lo = hi;
    hi = 2.0 * (hi - p_floor) + p_floor + p_scale;
    r_hi = residual_at(hi);
    if (++expand > 200)
      throw convergence_error("solve_star: failed to bracket the star pressure", hi, r_hi);
  }
  p = std::clamp(p, lo, hi);

  double r = residual_at(p);
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (r > 0.0)
      hi = p;
    else
      lo = p;
    if (r == 0.0) break;

    const double df = side_function(p, wL, eosL).df_dp + side_function(p, wR, eosR).df_dp;
    double p_next = p - r / df;
    if (!(p_next > lo) || !(p_next < hi) || !std::isfinite(p_next))
      p_next = 0.5 * (lo + hi);

    const double dp = std::abs(p_next - p);
    p = p_next;
    r = residual_at(p);
    if (dp <= opts.rel_tol * (std::abs(p) + p_scale)) break;
  }
  if (it >= opts.max_iterations)
    throw convergence_error("solve_star: Newton/bisection did not converge", p, r);

  star.p_star = p;
  star.residual = r;
  star.iterations = it + 1;
  star.u_star = 0.5 * (wL.u + wR.u) +
                0.5 * (side_function(p, wR, eosR).f - side_function(p, wL, eosL).f);
  star.wave_kind_left = p > wL.p ? WaveKind::shock : WaveKind::rarefaction;
  star.wave_kind_right = p > wR.p ? WaveKind::shock : WaveKind::rarefaction;
  star.rho_star_left = star_density(L, p, star.wave_kind_left);
  star.rho_star_right = star_density(R, p, star.wave_kind_right);
  return star;
}

PrimitiveState sample(const StarRegion& star, const PrimitiveState& wL, const EosParams& eosL,
                      const PrimitiveState& wR, const EosParams& eosR, double xi) {
  if (xi < star.u_star) {
    const Side L = make_side(wL, eosL);
    if (star.wave_kind_left == WaveKind::shock) {
      const double s = shock_speed(L, star.p_star, -1);
      if (xi < s) return wL;
      return {star.rho_star_left, star.u_star, star.p_star};
    }
    const double head = wL.u - L.c;
    if (xi <= head) return wL;
    const double c_star = std::sqrt(eosL.gamma * eff(star.p_star, eosL) / star.rho_star_left);
    const double tail = star.u_star - c_star;
    if (xi >= tail) return {star.rho_star_left, star.u_star, star.p_star};
    return fan_state(L, xi, -1);
  }

  const Side R = make_side(wR, eosR);
  if (star.wave_kind_right == WaveKind::shock) {
    const double s = shock_speed(R, star.p_star, +1);
    if (xi > s) return wR;
    return {star.rho_star_right, star.u_star, star.p_star};
  }
  const double head = wR.u + R.c;
  if (xi >= head) return wR;
  const double c_star = std::sqrt(eosR.gamma * eff(star.p_star, eosR) / star.rho_star_right);
  const double tail = star.u_star + c_star;
  if (xi <= tail) return {star.rho_star_right, star.u_star, star.p_star};
  return fan_state(R, xi, +1);
}

RiemannFan fan_from_star(const StarRegion& star, const PrimitiveState& wL, const EosParams& eosL,
                         const PrimitiveState& wR, const EosParams& eosR) {
  const Side L = make_side(wL, eosL);
  const Side R = make_side(wR, eosR);

  RiemannFan fan;
  fan.p_star = star.p_star;
  fan.s_star = star.u_star;
  fan.kind_left = star.wave_kind_left;
  fan.kind_right = star.wave_kind_right;
  fan.q_left = conserved_from_primitive(wL, eosL);
  fan.q_right = conserved_from_primitive(wR, eosR);
  fan.q_star_left =
      conserved_from_primitive({star.rho_star_left, star.u_star, star.p_star}, eosL);
  fan.q_star_right =
      conserved_from_primitive({star.rho_star_right, star.u_star, star.p_star}, eosR);

  if (star.wave_kind_left == WaveKind::shock) {
    fan.s_left = shock_speed(L, star.p_star, -1);
    fan.signal_min = std::min(fan.s_left, star.u_star);
  } else {
    const double head = wL.u - L.c;
    const double c_star = std::sqrt(eosL.gamma * eff(star.p_star, eosL) / star.rho_star_left);
    const double tail = star.u_star - c_star;
    fan.s_left = 0.5 * (head + tail);
    fan.signal_min = std::min(head, tail);
  }
  if (star.wave_kind_right == WaveKind::shock) {
    fan.s_right = shock_speed(R, star.p_star, +1);
    fan.signal_max = std::max(fan.s_right, star.u_star);
  } else {
    const double head = wR.u + R.c;
    const double c_star = std::sqrt(eosR.gamma * eff(star.p_star, eosR) / star.rho_star_right);
    const double tail = star.u_star + c_star;
    fan.s_right = 0.5 * (head + tail);
    fan.signal_max = std::max(head, tail);
  }
  return fan;
}

RiemannFan exact_fan(const PrimitiveState& wL, const EosParams& eosL,
                     const PrimitiveState& wR, const EosParams& eosR,
                     const ExactSolveOptions& opts) {
  return fan_from_star(solve_star(wL, eosL, wR, eosR, opts), wL, eosL, wR, eosR);
}

} // namespace mmshock
