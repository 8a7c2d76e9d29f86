#include "mmshock/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace mmshock {

RunResult run_scenario(const RunConfig& cfg, std::optional<double> slab_width,
                       const FrameHook& on_frame) {
  validate_config(cfg);

  RunConfig run = cfg;
  if (slab_width) {
    if (run.layout.slabs.empty())
      throw config_error("cannot override slab width: layout has no slab");
    run.layout.slabs.front().second = *slab_width;
  }

  const Grid1D grid{run.n_cells, run.x_lower, run.x_upper, 2};
  const BuiltLayout layout = build_layout(grid, run.materials, run.layout);

  InitialShockSpec shock;
  shock.peak_overpressure = run.peak_overpressure();
  shock.front = run.front;
  shock.plateau = run.plateau;
  shock.crest = run.crest;
  shock.crest_drop = run.crest_drop;
  shock.shoulder = run.shoulder;
  shock.shoulder_drop = run.shoulder_drop;
  shock.ramp = run.ramp;
  shock.ambient_pressure = run.ambient_pressure;

  SimulationState state = build_initial_state(layout, shock);

  RunResult result;
  result.slab_width = run.slab_width();
  result.max_snap_distance = layout.max_snap_distance;
  result.initial_totals = total_conserved(state, grid);

  double p_max = 0.0;
  for (int i = grid.first_interior(); i <= grid.last_interior(); ++i)
    p_max = std::max(p_max,
                     pressure_from_conserved(state.cells[i], layout.materials.eos(i)));
  result.initial_max = p_max;

  std::vector<Gauge> gauges;
  for (size_t g = 0; g < run.gauge_positions.size(); ++g)
    gauges.push_back({static_cast<int>(g) + 1, run.gauge_positions[g]});
  result.traces = make_traces(gauges);

  record_gauges(state, grid, layout.materials, result.traces);
  if (on_frame) on_frame(state, grid, layout.materials);

  const RunStats stats = run_until(
      state, grid, layout.materials, run.t_end, run.solver,
      [&](const SimulationState& s, const StepInfo&) {
        record_gauges(s, grid, layout.materials, result.traces);
        if (on_frame) on_frame(s, grid, layout.materials);
      });

  result.steps = stats.steps;
  result.cumulative_defect = stats.cumulative_defect;
  result.final_totals = total_conserved(state, grid);
  return result;
}

bool SweepResult::all_ok() const {
  return std::all_of(errors.begin(), errors.end(),
                     [](const std::string& e) { return e.empty(); });
}

SweepResult run_sweep(const SweepConfig& cfg, int jobs) {
  SweepResult out;
  out.widths = cfg.widths;
  out.runs.resize(cfg.widths.size());
  out.errors.assign(cfg.widths.size(), "");

  if (jobs <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    jobs = hw == 0 ? 1 : static_cast<int>(hw);
  }
  jobs = std::min<int>(jobs, static_cast<int>(cfg.widths.size()));

  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (;;) {
        const size_t k = next.fetch_add(1);
        if (k >= cfg.widths.size()) return;
        try {
          out.runs[k] = run_scenario(cfg.base, cfg.widths[k]);
        } catch (const std::exception& e) {
          out.errors[k] = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

} // namespace mmshock
