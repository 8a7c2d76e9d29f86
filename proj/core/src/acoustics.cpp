#include "mmshock/acoustics.hpp"

#include <cmath>

namespace mmshock {

Impedance impedance_of(const Material& mat, double ambient_pressure) {
  const PrimitiveState w{mat.rho_ref, 0.0, ambient_pressure};
  return {mat.rho_ref * sound_speed(w, mat.eos)};
}

TransmitReflect transmit_reflect(double p0, Impedance za, Impedance zb) {
  if (!(za.z > 0.0) || !(zb.z > 0.0))
    throw invalid_state_error("transmit_reflect: impedances must be positive");
  const double den = za.z + zb.z;
  return {p0 * 2.0 * zb.z / den, p0 * (zb.z - za.z) / den};
}

double nth_transmission(double p0, Impedance za, Impedance zp, Impedance zw, int n) {
  if (n < 1) throw invalid_state_error("nth_transmission: n must be >= 1");
  const double t_in = 2.0 * zp.z / (zp.z + za.z);
  const double t_out = 2.0 * zw.z / (zw.z + zp.z);
  const double r = ((za.z - zp.z) / (za.z + zp.z)) * ((zw.z - zp.z) / (zw.z + zp.z));
  return t_out * std::pow(r, n - 1) * t_in * p0;
}

double asymptotic_transmission(double p0, Impedance za, Impedance zw) {
  if (!(za.z > 0.0) || !(zw.z > 0.0))
    throw invalid_state_error("asymptotic_transmission: impedances must be positive");
  return p0 * 2.0 * zw.z / (zw.z + za.z);
}

double bounce_interval(double w0, double cp) {
  if (w0 < 0.0 || !(cp > 0.0))
    throw invalid_state_error("bounce_interval: need w0 >= 0 and cp > 0");
  return 2.0 * w0 / cp;
}

} // namespace mmshock
