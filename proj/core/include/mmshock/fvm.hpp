#ifndef MMSHOCK_FVM_HPP
#define MMSHOCK_FVM_HPP

#include <functional>
#include <limits>

#include "mmshock/grid.hpp"
#include "mmshock/riemann_exact.hpp"
#include "mmshock/riemann_hllc.hpp"

namespace mmshock {

enum class Limiter { none, minmod, superbee, mc };
enum class BoundaryKind { outflow, wall };

// Which Riemann solver serves an edge. hybrid: HLLC inside uniform ideal-gas
// regions, the exact solver at any material jump and inside uniform stiff
// (p_inf > 0) regions.
enum class Dispatch { hybrid, hllc_only, exact_only };

// When to shift the fan into the frame of the contact. jump_only: at
// material-jump edges with a stiff side. any_stiff: wherever a stiff cell
// touches the edge, jump or not.
enum class TransformPolicy { jump_only, any_stiff, off };

struct SolverOptions {
  double cfl = 0.9;
  int order = 2;
  Limiter limiter = Limiter::mc;
  Dispatch dispatch = Dispatch::hybrid;
  TransformPolicy transform = TransformPolicy::jump_only;
  BoundaryKind bc_left = BoundaryKind::outflow;
  BoundaryKind bc_right = BoundaryKind::outflow;
};

struct StepInfo {
  double dt = 0.0;
  double max_signal = 0.0;
  // dt * (F(QR) - F(QL) - sum_w s_w W_w) accumulated over interior edges
  // updated with shifted speeds: the conservation defect introduced by the
  // contact-frame coupling, per conserved component.
  std::array<double, 3> interface_defect{0.0, 0.0, 0.0};
};

struct RunStats {
  int steps = 0;
  std::array<double, 3> cumulative_defect{0.0, 0.0, 0.0};
};

void apply_boundaries(SimulationState& state, const Grid1D& grid, const MaterialGrid& materials,
                      BoundaryKind left, BoundaryKind right);

// One first-order-plus-limited-corrections wave-propagation update.
// dt = min(cfl * dx / max_signal, dt_max), so no wave crosses more than
// cfl < 1 cells. Throws invalid_state_error with cell diagnostics if the
// updated state leaves the admissible set.
StepInfo step(SimulationState& state, const Grid1D& grid, const MaterialGrid& materials,
              const SolverOptions& opts,
              double dt_max = std::numeric_limits<double>::infinity());

using StepCallback = std::function<void(const SimulationState&, const StepInfo&)>;

// Repeated steps with the final dt clipped to land on t_end exactly.
// The callback runs after every accepted step.
RunStats run_until(SimulationState& state, const Grid1D& grid, const MaterialGrid& materials,
                   double t_end, const SolverOptions& opts, const StepCallback& callback = {});

} // namespace mmshock

#endif
