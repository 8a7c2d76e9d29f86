#ifndef MMSHOCK_SCENARIO_HPP
#define MMSHOCK_SCENARIO_HPP

#include <string>
#include <utility>
#include <vector>

#include "mmshock/grid.hpp"

namespace mmshock {

// Layered material arrangement: an unbounded left region, a stack of
// finite-width slabs centered at x = 0 (zero-width slabs are dropped), and
// an unbounded right region.
struct LayeredLayout {
  std::string left;
  std::vector<std::pair<std::string, double>> slabs; // (material, width m)
  std::string right;
};

struct BuiltLayout {
  Grid1D grid;
  MaterialGrid materials;
  std::vector<double> requested_interfaces;
  std::vector<double> snapped_interfaces;
  double max_snap_distance = 0.0;
};

// Snap the slab boundaries to the nearest cell edges and assign a material
// to every cell. Every nonzero slab must span at least four cells; the
// error message reports the minimum n_cells that would resolve it.
BuiltLayout build_layout(const Grid1D& grid, const std::vector<Material>& table,
                         const LayeredLayout& layout);

// Idealised right-moving shock pulse: a sharp front at `front`, then a
// piecewise-linear decay behind it: a flat top (`plateau`), a steeper crest
// segment shedding `crest_drop`, a gentle shoulder shedding
// `shoulder_drop`, and a final ramp to ambient. Density and velocity inside
// the pulse follow the isentrope and the right-moving simple-wave relation.
// With zero crest and shoulder this is the plain front-plus-linear-decay
// shape.
struct InitialShockSpec {
  double peak_overpressure = 0.0; // Pa above ambient
  double front = 0.0;             // m
  double plateau = 0.0;           // m
  double crest = 0.0;             // m
  double crest_drop = 0.0;        // Pa shed across the crest segment
  double shoulder = 0.0;          // m
  double shoulder_drop = 0.0;     // Pa shed across the shoulder segment
  double ramp = 0.0;              // m
  double ambient_pressure = 101325.0;

  double pulse_length() const { return plateau + crest + shoulder + ramp; }
  double back() const { return front - pulse_length(); }
  // overpressure at distance d behind the front
  double overpressure_at(double d) const;
};

SimulationState build_initial_state(const BuiltLayout& layout, const InitialShockSpec& shock);

struct Gauge {
  int id = 0;
  double position = 0.0; // m
};

// Pressure-versus-time probe at a fixed position; the sample is the pressure
// of the cell containing the gauge (a gauge on an edge reads the right cell).
struct GaugeTrace {
  int id = 0;
  double position = 0.0;
  std::vector<std::pair<double, double>> samples; // (t s, p Pa)

  double max_pressure() const;
};

std::vector<GaugeTrace> make_traces(const std::vector<Gauge>& gauges);

void record_gauges(const SimulationState& state, const Grid1D& grid,
                   const MaterialGrid& materials, std::vector<GaugeTrace>& traces);

} // namespace mmshock

#endif
