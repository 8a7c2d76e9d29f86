#include "mmshock/eos.hpp"

#include <cmath>
#include <sstream>

namespace mmshock {

namespace {

[[noreturn]] void fail_state(const char* what, double rho, double a, double b, const char* bn) {
  std::ostringstream os;
  os << what << " (rho=" << rho << ", " << bn << "=" << b << ", value=" << a << ")";
  throw invalid_state_error(os.str());
}

} // namespace

void validate(const EosParams& eos) {
  if (!(eos.gamma > 1.0))
    throw invalid_state_error("EOS gamma must exceed 1, got " + std::to_string(eos.gamma));
  if (!(eos.p_inf >= 0.0))
    throw invalid_state_error("EOS p_inf must be >= 0, got " + std::to_string(eos.p_inf));
}

void validate(const PrimitiveState& w, const EosParams& eos) {
  if (!(w.rho > 0.0) || !std::isfinite(w.rho))
    fail_state("non-positive density", w.rho, w.rho, w.p, "p");
  if (!(w.p + eos.p_inf > 0.0) || !std::isfinite(w.p))
    fail_state("effective pressure p + p_inf not positive", w.rho, w.p + eos.p_inf, w.p, "p");
}

void validate(const ConservedState& q, const EosParams& eos) {
  (void)pressure_from_conserved(q, eos);
}

double pressure_from_conserved(const ConservedState& q, const EosParams& eos) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho))
    fail_state("non-positive density", q.rho, q.rho, q.ener, "ener");
  const double rho_e = q.ener - 0.5 * q.mom * q.mom / q.rho;
  const double p = (eos.gamma - 1.0) * rho_e - eos.gamma * eos.p_inf;
  if (!(p + eos.p_inf > 0.0) || !std::isfinite(p))
    fail_state("effective pressure p + p_inf not positive", q.rho, p + eos.p_inf, q.ener, "ener");
  return p;
}

ConservedState conserved_from_primitive(const PrimitiveState& w, const EosParams& eos) {
  validate(w, eos);
  ConservedState q;
  q.rho = w.rho;
  q.mom = w.rho * w.u;
  q.ener = (w.p + eos.gamma * eos.p_inf) / (eos.gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
  return q;
}

PrimitiveState primitive_from_conserved(const ConservedState& q, const EosParams& eos) {
  const double p = pressure_from_conserved(q, eos);
  return {q.rho, q.mom / q.rho, p};
}

double sound_speed(const PrimitiveState& w, const EosParams& eos) {
  validate(w, eos);
  return std::sqrt(eos.gamma * (w.p + eos.p_inf) / w.rho);
}

double specific_internal_energy(const PrimitiveState& w, const EosParams& eos) {
  validate(w, eos);
  return (w.p + eos.gamma * eos.p_inf) / ((eos.gamma - 1.0) * w.rho);
}

std::array<double, 3> flux(const PrimitiveState& w, const EosParams& eos) {
  const ConservedState q = conserved_from_primitive(w, eos);
  return flux(q, w.p);
}

std::array<double, 3> flux(const ConservedState& q, double p) {
  const double u = q.mom / q.rho;
  return {q.mom, q.mom * u + p, u * (q.ener + p)};
}

} // namespace mmshock
