#ifndef MMSHOCK_EXPERIMENT_HPP
#define MMSHOCK_EXPERIMENT_HPP

#include <functional>
#include <optional>

#include "mmshock/config.hpp"

namespace mmshock {

struct RunResult {
  double slab_width = 0.0;             // m
  double initial_max = 0.0;            // Pa, max pressure of the initial state
  std::vector<GaugeTrace> traces;      // one per configured gauge
  std::array<double, 3> initial_totals{0.0, 0.0, 0.0};
  std::array<double, 3> final_totals{0.0, 0.0, 0.0};
  std::array<double, 3> cumulative_defect{0.0, 0.0, 0.0};
  double max_snap_distance = 0.0;
  int steps = 0;

  double gauge_max(size_t gauge_index) const { return traces.at(gauge_index).max_pressure(); }
};

// Invoked after the initial state is built and after every step; gives
// outputs (snapshot frames) access to the grid and materials.
using FrameHook =
    std::function<void(const SimulationState&, const Grid1D&, const MaterialGrid&)>;

// Build the configured scenario and integrate to t_end, recording gauges.
// slab_width, when given, overrides the width of the first slab (a sweep
// member); 0 drops the slab entirely.
RunResult run_scenario(const RunConfig& cfg, std::optional<double> slab_width = {},
                       const FrameHook& on_frame = {});

struct SweepResult {
  std::vector<double> widths;
  std::vector<RunResult> runs;               // aligned with widths
  std::vector<std::string> errors;           // empty string per clean run
  bool all_ok() const;
};

// Run each width independently, up to `jobs` in parallel. Failures are
// recorded per width and do not stop the other members.
SweepResult run_sweep(const SweepConfig& cfg, int jobs = 0);

} // namespace mmshock

#endif
