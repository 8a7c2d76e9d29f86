#include "mmshock/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmshock {

namespace {

int material_index(const std::vector<Material>& table, const std::string& name) {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].name == name) return static_cast<int>(i);
  throw config_error("unknown material '" + name + "'");
}

} // namespace

BuiltLayout build_layout(const Grid1D& grid, const std::vector<Material>& table,
                         const LayeredLayout& layout) {
  if (grid.n_cells <= 0 || !(grid.x_upper > grid.x_lower))
    throw config_error("layout: grid must have positive extent and cell count");
  if (grid.n_ghost < 2) throw config_error("layout: at least two ghost cells are required");
  for (const Material& m : table) validate(m.eos);

  BuiltLayout out;
  out.grid = grid;
  out.materials.table = table;

  double total_width = 0.0;
  std::vector<std::pair<int, double>> slabs; // (material index, width), zero widths dropped
  for (const auto& [name, width] : layout.slabs) {
    if (width < 0.0) throw config_error("layout: slab width must be >= 0");
    if (width == 0.0) continue;
    slabs.emplace_back(material_index(table, name), width);
    total_width += width;
  }

  const double dx = grid.dx();
  const int min_cells_per_slab = 4;
  for (const auto& [idx, width] : slabs) {
    if (width < min_cells_per_slab * dx) {
      const double domain = grid.x_upper - grid.x_lower;
      const int needed = static_cast<int>(std::ceil(min_cells_per_slab * domain / width));
      std::ostringstream os;
      os << "layout: slab '" << table[idx].name << "' of width " << width
         << " m spans fewer than " << min_cells_per_slab << " cells at dx=" << dx
         << "; increase n_cells to at least " << needed;
      throw config_error(os.str());
    }
  }

  // Slab stack centered at x = 0, boundaries snapped to the nearest edge.
  std::vector<double> requested;
  requested.push_back(-0.5 * total_width);
  for (const auto& [idx, width] : slabs) requested.push_back(requested.back() + width);
  if (slabs.empty()) requested = {0.0}; // single left|right interface

  std::vector<int> snapped_edges;
  for (double x : requested) {
    if (!(x > grid.x_lower && x < grid.x_upper))
      throw config_error("layout: slab stack does not fit inside the domain");
    const auto k = static_cast<int>(std::lround((x - grid.x_lower) / dx));
    snapped_edges.push_back(k);
    const double sx = grid.x_lower + k * dx;
    out.requested_interfaces.push_back(x);
    out.snapped_interfaces.push_back(sx);
    out.max_snap_distance = std::max(out.max_snap_distance, std::abs(sx - x));
  }
  for (size_t i = 0; i + 1 < snapped_edges.size(); ++i) {
    if (snapped_edges[i + 1] - snapped_edges[i] < min_cells_per_slab) {
      std::ostringstream os;
      os << "layout: slab '" << table[slabs[i].first].name
         << "' spans fewer than " << min_cells_per_slab << " cells after snapping"
         << "; increase n_cells";
      throw config_error(os.str());
    }
  }

  const int left_idx = material_index(table, layout.left);
  const int right_idx = material_index(table, layout.right);

  out.materials.cell_material.assign(grid.total_cells(), left_idx);
  for (int i = 0; i < grid.total_cells(); ++i) {
    const int local = i - grid.n_ghost; // cell [local, local+1) in edge units
    int m = left_idx;
    size_t s = 0;
    for (; s < snapped_edges.size(); ++s) {
      if (local < snapped_edges[s]) break;
    }
    if (s == snapped_edges.size())
      m = right_idx;
    else if (s > 0)
      m = slabs[s - 1].first;
    out.materials.cell_material[i] = m;
  }
  // Ghosts inherit the nearest interior material.
  for (int k = 0; k < grid.n_ghost; ++k) {
    out.materials.cell_material[k] = out.materials.cell_material[grid.first_interior()];
    out.materials.cell_material[grid.last_interior() + 1 + k] =
        out.materials.cell_material[grid.last_interior()];
  }
  return out;
}

SimulationState build_initial_state(const BuiltLayout& layout, const InitialShockSpec& shock) {
  const Grid1D& grid = layout.grid;
  if (shock.peak_overpressure < 0.0)
    throw config_error("initial shock: peak overpressure must be >= 0");
  if (shock.ramp < 0.0 || shock.plateau < 0.0 || shock.crest < 0.0 || shock.shoulder < 0.0)
    throw config_error("initial shock: segment lengths must be >= 0");
  if (shock.crest_drop < 0.0 || shock.shoulder_drop < 0.0 ||
      shock.crest_drop + shock.shoulder_drop > shock.peak_overpressure)
    throw config_error("initial shock: segment drops must be >= 0 and sum below the peak");

  // The pulse must sit inside the left (ideal gas) region.
  if (shock.peak_overpressure > 0.0) {
    const double left_end = layout.snapped_interfaces.empty()
                                ? grid.x_upper
                                : layout.snapped_interfaces.front();
    if (!(shock.back() >= grid.x_lower && shock.front <= left_end))
      throw config_error("initial shock: pulse extends outside the left material region");
  }

  SimulationState state;
  state.time = 0.0;
  state.cells.resize(grid.total_cells());

  const double p_amb = shock.ambient_pressure;

  for (int i = 0; i < grid.total_cells(); ++i) {
    const Material& mat = layout.materials.material(i);
    const double x = grid.cell_center(i);

    double p = p_amb;
    if (shock.peak_overpressure > 0.0 && x >= shock.back() && x <= shock.front)
      p = p_amb + shock.overpressure_at(shock.front - x);

    PrimitiveState w{mat.rho_ref, 0.0, p};
    if (p != p_amb) {
      const double g = mat.eos.gamma;
      const double pr = (p + mat.eos.p_inf) / (p_amb + mat.eos.p_inf);
      const double c_amb = sound_speed({mat.rho_ref, 0.0, p_amb}, mat.eos);
      w.rho = mat.rho_ref * std::pow(pr, 1.0 / g);
      w.u = 2.0 * c_amb / (g - 1.0) * (std::pow(pr, (g - 1.0) / (2.0 * g)) - 1.0);
    }
    state.cells[i] = conserved_from_primitive(w, mat.eos);
  }
  return state;
}

double InitialShockSpec::overpressure_at(double d) const {
  if (d < 0.0 || d > pulse_length()) return 0.0;
  double level = peak_overpressure;
  if (d <= plateau) return level;
  d -= plateau;
  if (d <= crest && crest > 0.0) return level - crest_drop * d / crest;
  level -= crest_drop;
  d -= crest;
  if (d <= shoulder && shoulder > 0.0) return level - shoulder_drop * d / shoulder;
  level -= shoulder_drop;
  d -= shoulder;
  if (ramp <= 0.0) return 0.0;
  return level * (1.0 - d / ramp);
}

double GaugeTrace::max_pressure() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& [t, p] : samples) m = std::max(m, p);
  return m;
}

std::vector<GaugeTrace> make_traces(const std::vector<Gauge>& gauges) {
  std::vector<GaugeTrace> traces;
  traces.reserve(gauges.size());
  for (const Gauge& g : gauges) traces.push_back({g.id, g.position, {}});
  return traces;
}

void record_gauges(const SimulationState& state, const Grid1D& grid,
                   const MaterialGrid& materials, std::vector<GaugeTrace>& traces) {
  for (GaugeTrace& tr : traces) {
    const int cell = grid.cell_of(tr.position);
    const double p = pressure_from_conserved(state.cells[cell], materials.eos(cell));
    tr.samples.emplace_back(state.time, p);
  }
}

} // namespace mmshock
