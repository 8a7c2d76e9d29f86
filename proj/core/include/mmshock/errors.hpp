#ifndef MMSHOCK_ERRORS_HPP
#define MMSHOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmshock {

// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A state violated a physical invariant (rho <= 0, p + p_inf <= 0, ...).
// The message names the offending values, and the cell index/position when
// the failure happened inside a grid update.
class invalid_state_error : public error {
public:
  using error::error;
};

// Riemann solver hit a degenerate configuration (coincident wave speeds,
// vanishing denominator).
class degenerate_error : public error {
public:
  using error::error;
};

// Data that would open a vacuum region; the exact solver refuses these.
class vacuum_error : public error {
public:
  using error::error;
};

// Root finding did not converge; carries the last iterate for diagnostics.
class convergence_error : public error {
public:
  convergence_error(const std::string& what, double last_iterate, double last_residual)
      : error(what), last_iterate_(last_iterate), last_residual_(last_residual) {}
  double last_iterate() const { return last_iterate_; }
  double last_residual() const { return last_residual_; }

private:
  double last_iterate_;
  double last_residual_;
};

// Configuration file problem; carries the 1-based line that caused it
// (0 when the error is not tied to a specific line).
class config_error : public error {
public:
  config_error(const std::string& what, int line = 0) : error(what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

} // namespace mmshock

#endif
