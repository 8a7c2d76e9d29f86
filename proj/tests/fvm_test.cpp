#include <doctest.h>

#include <cmath>
#include <numeric>

#include "mmshock/config.hpp"
#include "mmshock/fvm.hpp"
#include "mmshock/scenario.hpp"

using namespace mmshock;

namespace {

const EosParams kAir{1.4, 0.0};

// Uniform-air setup over [0, L] with n cells.
struct Box {
  Grid1D grid;
  MaterialGrid materials;

  Box(int n, double length = 1.0) {
    grid = {n, 0.0, length, 2};
    materials.table = {{"air", kAir, 1.204}};
    materials.cell_material.assign(grid.total_cells(), 0);
  }

  SimulationState uniform(double rho, double u, double p) const {
    SimulationState s;
    s.cells.assign(grid.total_cells(), conserved_from_primitive({rho, u, p}, kAir));
    return s;
  }
};

// Smooth right-moving simple wave: pressure bump on an ambient background.
SimulationState smooth_pulse(const Box& box, double amplitude, double x0, double sigma) {
  SimulationState s;
  s.cells.resize(box.grid.total_cells());
  const double p0 = 1.0e5, rho0 = 1.204;
  const double c0 = std::sqrt(1.4 * p0 / rho0);
  for (int i = 0; i < box.grid.total_cells(); ++i) {
    const double x = box.grid.cell_center(i);
    const double p = p0 * (1.0 + amplitude * std::exp(-std::pow((x - x0) / sigma, 2)));
    const double rho = rho0 * std::pow(p / p0, 1.0 / 1.4);
    const double u = 2.0 * c0 / 0.4 * (std::pow(p / p0, 0.4 / 2.8) - 1.0);
    s.cells[i] = conserved_from_primitive({rho, u, p}, kAir);
  }
  return s;
}

double linf_rel(const SimulationState& a, const SimulationState& b, const Grid1D& g) {
  double worst = 0.0;
  for (int i = g.first_interior(); i <= g.last_interior(); ++i) {
    worst = std::max(worst, std::abs(a.cells[i].rho - b.cells[i].rho) / b.cells[i].rho);
    worst = std::max(worst,
                     std::abs(a.cells[i].mom - b.cells[i].mom) / (b.cells[i].rho * 400.0));
    worst = std::max(worst, std::abs(a.cells[i].ener - b.cells[i].ener) / b.cells[i].ener);
  }
  return worst;
}

} // namespace

TEST_CASE("boundary ghost filling") {
  Box box(16);
  SimulationState s = box.uniform(1.2, 7.0, 1.1e5);

  SUBCASE("outflow copies the nearest interior cell") {
    apply_boundaries(s, box.grid, box.materials, BoundaryKind::outflow,
                     BoundaryKind::outflow);
    const ConservedState& first = s.cells[box.grid.first_interior()];
    CHECK(s.cells[0].rho == first.rho);
    CHECK(s.cells[1].mom == first.mom);
    CHECK(s.cells[box.grid.last_interior() + 2].ener == first.ener);
  }
  SUBCASE("wall mirrors density and pressure and negates velocity") {
    apply_boundaries(s, box.grid, box.materials, BoundaryKind::wall, BoundaryKind::wall);
    const ConservedState& fi = s.cells[box.grid.first_interior()];
    CHECK(s.cells[1].rho == fi.rho);
    CHECK(s.cells[1].mom == -fi.mom);
    CHECK(s.cells[1].ener == fi.ener);
    const ConservedState& si = s.cells[box.grid.first_interior() + 1];
    CHECK(s.cells[0].rho == si.rho);
    CHECK(s.cells[0].mom == -si.mom);
  }
  SUBCASE("wall ghosts mirror exactly for a resting interior") {
    SimulationState r = box.uniform(1.2, 0.0, 1.1e5);
    apply_boundaries(r, box.grid, box.materials, BoundaryKind::wall, BoundaryKind::wall);
    CHECK(r.cells[1].mom == -0.0);
    CHECK(r.cells[1].rho == r.cells[box.grid.first_interior()].rho);
  }
}

TEST_CASE("uniform state is a fixed point of the update") {
  Box box(64);
  SimulationState s = box.uniform(1.2, 0.0, 1.0e5);
  const SimulationState before = s;
  SolverOptions opts;
  for (int k = 0; k < 5; ++k) (void)step(s, box.grid, box.materials, opts);
  CHECK(linf_rel(s, before, box.grid) < 1e-14);
}

TEST_CASE("equilibrium across material interfaces stays stationary") {
  RunConfig cfg;
  cfg.n_cells = 200;
  const Grid1D grid{cfg.n_cells, cfg.x_lower, cfg.x_upper, 2};
  const BuiltLayout layout = build_layout(grid, cfg.materials, cfg.layout);

  SimulationState s;
  s.cells.resize(grid.total_cells());
  for (int i = 0; i < grid.total_cells(); ++i) {
    const Material& m = layout.materials.material(i);
    s.cells[i] = conserved_from_primitive({m.rho_ref, 0.0, cfg.ambient_pressure}, m.eos);
  }
  const SimulationState before = s;

  SolverOptions opts;
  for (int k = 0; k < 20; ++k) {
    (void)step(s, grid, layout.materials, opts);
    for (int i = grid.first_interior(); i <= grid.last_interior(); ++i) {
      CHECK(std::abs(s.cells[i].rho - before.cells[i].rho) / before.cells[i].rho < 1e-12);
      CHECK(std::abs(s.cells[i].mom) /
                (before.cells[i].rho * sound_speed({before.cells[i].rho, 0.0,
                                                    cfg.ambient_pressure},
                                                   layout.materials.eos(i))) <
            1e-12);
      CHECK(std::abs(s.cells[i].ener - before.cells[i].ener) / before.cells[i].ener < 1e-12);
    }
  }
}

TEST_CASE("wall-bounded box conserves mass, momentum and energy") {
  Box box(200);
  SimulationState s = smooth_pulse(box, 0.2, 0.5, 0.08);
  // Make the data symmetric so the net momentum is zero by construction:
  // overwrite with a symmetric resting pressure bump.
  const double p0 = 1.0e5, rho0 = 1.204;
  for (int i = 0; i < box.grid.total_cells(); ++i) {
    const double x = box.grid.cell_center(i);
    const double p = p0 * (1.0 + 0.2 * std::exp(-std::pow((x - 0.5) / 0.08, 2)));
    s.cells[i] = conserved_from_primitive({rho0 * std::pow(p / p0, 1.0 / 1.4), 0.0, p}, kAir);
  }

  SolverOptions opts;
  opts.bc_left = BoundaryKind::wall;
  opts.bc_right = BoundaryKind::wall;

  const auto before = total_conserved(s, box.grid);
  for (int k = 0; k < 300; ++k) (void)step(s, box.grid, box.materials, opts);
  const auto after = total_conserved(s, box.grid);

  CHECK(std::abs(after[0] - before[0]) / before[0] < 1e-10);
  CHECK(std::abs(after[2] - before[2]) / before[2] < 1e-10);
  const double mom_scale = before[0] * std::sqrt(1.4 * p0 / rho0);
  CHECK(std::abs(after[1] - before[1]) / mom_scale < 1e-10);
}

TEST_CASE("cfl bound holds by construction") {
  Box box(100);
  SimulationState s = smooth_pulse(box, 0.5, 0.3, 0.06);
  SolverOptions opts;
  opts.cfl = 0.7;
  for (int k = 0; k < 20; ++k) {
    const StepInfo info = step(s, box.grid, box.materials, opts);
    CHECK(info.max_signal * info.dt / box.grid.dx() <= opts.cfl * (1.0 + 1e-14));
  }
}

TEST_CASE("run_until semantics") {
  Box box(50);
  SimulationState s = box.uniform(1.2, 0.0, 1.0e5);
  SolverOptions opts;

  SUBCASE("t_end equal to the current time does nothing") {
    const RunStats stats = run_until(s, box.grid, box.materials, 0.0, opts);
    CHECK(stats.steps == 0);
    CHECK(s.time == 0.0);
  }
  SUBCASE("lands on t_end exactly and keeps callback times increasing") {
    std::vector<double> times;
    const RunStats stats =
        run_until(s, box.grid, box.materials, 1.3e-4, opts,
                  [&](const SimulationState& st, const StepInfo&) { times.push_back(st.time); });
    CHECK(stats.steps > 1);
    CHECK(s.time == 1.3e-4);
    for (size_t i = 1; i < times.size(); ++i) CHECK(times[i] > times[i - 1]);
    CHECK(times.back() == 1.3e-4);
  }
  SUBCASE("rejects a t_end in the past") {
    s.time = 1.0;
    CHECK_THROWS_AS((void)run_until(s, box.grid, box.materials, 0.5, opts), error);
  }
}

TEST_CASE("wall reflection doubles the peak pressure in the linear regime") {
  Box box(800, 2.0);
  const double amp = 2e-3;
  SimulationState s = smooth_pulse(box, amp, 1.0, 0.1);
  SolverOptions opts;
  opts.bc_left = BoundaryKind::outflow;
  opts.bc_right = BoundaryKind::wall;

  // Track the wall-cell pressure while the pulse reflects.
  double wall_peak = 0.0;
  const int wall_cell = box.grid.last_interior();
  const double c0 = std::sqrt(1.4 * 1.0e5 / 1.204);
  const double t_end = (2.0 - 1.0) / c0 + 0.25 / c0; // reach wall plus margin
  run_until(s, box.grid, box.materials, t_end, opts,
            [&](const SimulationState& st, const StepInfo&) {
              wall_peak = std::max(
                  wall_peak, pressure_from_conserved(st.cells[wall_cell], kAir));
            });
  const double expected = 1.0e5 * (1.0 + 2.0 * amp);
  CHECK(std::abs(wall_peak - expected) / (2.0 * amp * 1.0e5) < 0.02);
}

TEST_CASE("shock-tube density error decreases with resolution") {
  const PrimitiveState wl{1.0, 0.0, 1.0};
  const PrimitiveState wr{0.125, 0.0, 0.1};
  const StarRegion star = solve_star(wl, kAir, wr, kAir);
  const double t_end = 0.2;

  auto l1_error = [&](int n, double lo, double hi) {
    Grid1D grid{n, -0.5, 0.5, 2};
    MaterialGrid mat;
    mat.table = {{"gas", kAir, 1.0}};
    mat.cell_material.assign(grid.total_cells(), 0);
    SimulationState s;
    s.cells.resize(grid.total_cells());
    for (int i = 0; i < grid.total_cells(); ++i)
      s.cells[i] =
          conserved_from_primitive(grid.cell_center(i) < 0.0 ? wl : wr, kAir);
    SolverOptions opts;
    run_until(s, grid, mat, t_end, opts);
    double err = 0.0;
    int count = 0;
    for (int i = grid.first_interior(); i <= grid.last_interior(); ++i) {
      const double x = grid.cell_center(i);
      if (x < lo || x > hi) continue;
      const PrimitiveState exact = sample(star, wl, kAir, wr, kAir, x / t_end);
      err += std::abs(s.cells[i].rho - exact.rho) * grid.dx();
      ++count;
    }
    REQUIRE(count > 0);
    return err;
  };

  const double e200 = l1_error(200, -0.5, 0.5);
  const double e400 = l1_error(400, -0.5, 0.5);
  const double e800 = l1_error(800, -0.5, 0.5);
  CHECK(e400 < e200);
  CHECK(e800 < e400);

  // In the smooth rarefaction interior the limited scheme converges fast.
  const double s400 = l1_error(400, -0.20, -0.05);
  const double s800 = l1_error(800, -0.20, -0.05);
  CHECK(s400 / s800 >= 1.8);
}

TEST_CASE("identical configurations give bitwise identical runs") {
  Box box(128);
  SolverOptions opts;
  SimulationState a = smooth_pulse(box, 0.1, 0.4, 0.07);
  SimulationState b = smooth_pulse(box, 0.1, 0.4, 0.07);
  run_until(a, box.grid, box.materials, 5e-4, opts);
  run_until(b, box.grid, box.materials, 5e-4, opts);
  for (int i = box.grid.first_interior(); i <= box.grid.last_interior(); ++i) {
    CHECK(a.cells[i].rho == b.cells[i].rho);
    CHECK(a.cells[i].mom == b.cells[i].mom);
    CHECK(a.cells[i].ener == b.cells[i].ener);
  }
}

TEST_CASE("post-step validation reports the offending cell") {
  Box box(32);
  SimulationState s = box.uniform(1.2, 0.0, 1.0e5);
  s.cells[box.grid.first_interior() + 5].ener = -1.0;
  SolverOptions opts;
  try {
    (void)step(s, box.grid, box.materials, opts);
    FAIL("expected invalid_state_error");
  } catch (const invalid_state_error& e) {
    CHECK(std::string(e.what()).find("cell") != std::string::npos);
  }
}

TEST_CASE("step rejects an out-of-range cfl target") {
  Box box(16);
  SimulationState s = box.uniform(1.2, 0.0, 1.0e5);
  SolverOptions opts;
  opts.cfl = 1.5;
  CHECK_THROWS_AS((void)step(s, box.grid, box.materials, opts), error);
}
