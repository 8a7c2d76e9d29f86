#ifndef MMSHOCK_ACOUSTICS_HPP
#define MMSHOCK_ACOUSTICS_HPP

#include "mmshock/eos.hpp"

namespace mmshock {

// Acoustic impedance Z = rho * c.
struct Impedance {
  double z = 0.0; // Pa s/m
};

Impedance impedance_of(const Material& mat, double ambient_pressure);

struct TransmitReflect {
  double transmitted = 0.0; // Pa
  double reflected = 0.0;   // Pa
};

// Normal-incidence interface coefficients:
//   pT = p0 2 Z_B / (Z_A + Z_B),  pR = p0 (Z_B - Z_A) / (Z_A + Z_B),
// satisfying p0 + pR = pT exactly.
TransmitReflect transmit_reflect(double p0, Impedance za, Impedance zb);

// Amplitude of the n-th successive transmission through a finite middle
// layer (two reflections per internal round trip):
//   pT_n = 2Zw/(Zw+Zp) * r^(n-1) * 2Zp/(Zp+Za) * p0,
//   r = (Za-Zp)(Zw-Zp) / ((Za+Zp)(Zw+Zp)).
double nth_transmission(double p0, Impedance za, Impedance zp, Impedance zw, int n);

// Sum of all transmissions: p0 * 2Zw/(Zw+Za). Independent of the middle
// layer's impedance.
double asymptotic_transmission(double p0, Impedance za, Impedance zw);

// Time between successive transmitted fronts for a layer of width w0 and
// layer sound speed cp: tau = 2 w0 / cp.
double bounce_interval(double w0, double cp);

} // namespace mmshock

#endif
