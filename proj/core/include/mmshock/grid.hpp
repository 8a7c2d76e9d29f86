#ifndef MMSHOCK_GRID_HPP
#define MMSHOCK_GRID_HPP

#include <cmath>
#include <vector>

#include "mmshock/eos.hpp"

namespace mmshock {

// Uniform 1D grid with ghost cells. Global cell indices run over
// [0, n_cells + 2 n_ghost); interior cells start at n_ghost. Edge e sits
// between cells e-1 and e.
struct Grid1D {
  int n_cells = 0;
  double x_lower = 0.0;
  double x_upper = 0.0;
  int n_ghost = 2;

  double dx() const { return (x_upper - x_lower) / n_cells; }
  int total_cells() const { return n_cells + 2 * n_ghost; }
  int first_interior() const { return n_ghost; }
  int last_interior() const { return n_ghost + n_cells - 1; }
  bool is_interior(int i) const { return i >= first_interior() && i <= last_interior(); }

  double cell_center(int i) const { return x_lower + (i - n_ghost + 0.5) * dx(); }
  double edge_position(int e) const { return x_lower + (e - n_ghost) * dx(); }

  // Interior cell containing x. A position exactly on a cell edge belongs to
  // the cell on the right of that edge.
  int cell_of(double x) const {
    const double s = (x - x_lower) / dx();
    const auto k = static_cast<long>(std::lround(s));
    long c;
    if (std::abs(s - static_cast<double>(k)) < 1e-9)
      c = k; // on an edge
    else
      c = static_cast<long>(std::floor(s));
    if (c < 0) c = 0;
    if (c >= n_cells) c = n_cells - 1;
    return static_cast<int>(c) + n_ghost;
  }
};

// Cell-centered material assignment over a grid (ghosts included); material
// changes sit exactly on cell edges.
struct MaterialGrid {
  std::vector<Material> table;
  std::vector<int> cell_material;

  const Material& material(int cell) const { return table[cell_material[cell]]; }
  const EosParams& eos(int cell) const { return table[cell_material[cell]].eos; }
  bool jump_at_edge(int e) const { return cell_material[e - 1] != cell_material[e]; }
};

struct SimulationState {
  double time = 0.0;
  std::vector<ConservedState> cells; // ghosts included
};

// Sum of (rho, mom, ener) * dx over interior cells.
std::array<double, 3> total_conserved(const SimulationState& state, const Grid1D& grid);

} // namespace mmshock

#endif
