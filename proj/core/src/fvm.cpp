#include "mmshock/fvm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmshock {

std::array<double, 3> total_conserved(const SimulationState& state, const Grid1D& grid) {
  std::array<double, 3> tot{0.0, 0.0, 0.0};
  for (int i = grid.first_interior(); i <= grid.last_interior(); ++i) {
    tot[0] += state.cells[i].rho;
    tot[1] += state.cells[i].mom;
    tot[2] += state.cells[i].ener;
  }
  const double dx = grid.dx();
  return {tot[0] * dx, tot[1] * dx, tot[2] * dx};
}

void apply_boundaries(SimulationState& state, const Grid1D& grid, const MaterialGrid& materials,
                      BoundaryKind left, BoundaryKind right) {
  (void)materials; // ghosts keep the material of the nearest interior cell
  const int ng = grid.n_ghost;
  const int fi = grid.first_interior();
  const int li = grid.last_interior();

  for (int k = 0; k < ng; ++k) {
    if (left == BoundaryKind::outflow) {
      state.cells[k] = state.cells[fi];
    } else {
      ConservedState q = state.cells[fi + (ng - 1 - k)];
      q.mom = -q.mom;
      state.cells[k] = q;
    }
    const int g = li + 1 + k;
    if (right == BoundaryKind::outflow) {
      state.cells[g] = state.cells[li];
    } else {
      ConservedState q = state.cells[li - k];
      q.mom = -q.mom;
      state.cells[g] = q;
    }
  }
}

namespace {

struct EdgeData {
  std::array<Wave, 3> waves{};
  std::array<double, 3> amdq{0.0, 0.0, 0.0};
  std::array<double, 3> apdq{0.0, 0.0, 0.0};
  std::array<double, 3> correction{0.0, 0.0, 0.0};
  std::array<double, 3> defect{0.0, 0.0, 0.0};
  double max_signal = 0.0;
  bool jump = false;
  bool transformed = false;
};

inline double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double limiter_value(Limiter lim, double theta) {
  switch (lim) {
    case Limiter::none:
      return 1.0;
    case Limiter::minmod:
      return std::max(0.0, std::min(1.0, theta));
    case Limiter::superbee:
      return std::max({0.0, std::min(1.0, 2.0 * theta), std::min(2.0, theta)});
    case Limiter::mc:
      return std::max(0.0, std::min({0.5 * (1.0 + theta), 2.0, 2.0 * theta}));
  }
  return 1.0;
}

void fluctuations_from_waves(EdgeData& ed) {
  for (const Wave& w : ed.waves) {
    const double sm = std::min(w.speed, 0.0);
    const double sp = std::max(w.speed, 0.0);
    for (int c = 0; c < 3; ++c) {
      ed.amdq[c] += sm * w.dq[c];
      ed.apdq[c] += sp * w.dq[c];
    }
  }
}

} // namespace

StepInfo step(SimulationState& state, const Grid1D& grid, const MaterialGrid& materials,
              const SolverOptions& opts, double dt_max) {
  if (!(opts.cfl > 0.0 && opts.cfl < 1.0))
    throw error("step: cfl_target must lie in (0, 1), got " + std::to_string(opts.cfl));

  apply_boundaries(state, grid, materials, opts.bc_left, opts.bc_right);

  const int n_tot = grid.total_cells();
  const double dx = grid.dx();

  std::vector<PrimitiveState> prim(n_tot);
  for (int i = 0; i < n_tot; ++i) {
    try {
      prim[i] = primitive_from_conserved(state.cells[i], materials.eos(i));
    } catch (const invalid_state_error& e) {
      std::ostringstream os;
      os << "cell " << i - grid.n_ghost << " at x=" << grid.cell_center(i)
         << ", t=" << state.time << ": " << e.what();
      throw invalid_state_error(os.str());
    }
  }

  std::vector<EdgeData> edges(n_tot); // index by right cell; edges 1..n_tot-1
  double s_max = 0.0;

  for (int e = 1; e < n_tot; ++e) {
    const PrimitiveState& wl = prim[e - 1];
    const PrimitiveState& wr = prim[e];
    const EosParams& el = materials.eos(e - 1);
    const EosParams& er = materials.eos(e);
    EdgeData& ed = edges[e];

    ed.jump = materials.jump_at_edge(e);
    const bool stiff = el.p_inf > 0.0 || er.p_inf > 0.0;

    bool use_exact = false;
    switch (opts.dispatch) {
      case Dispatch::hybrid: use_exact = ed.jump || stiff; break;
      case Dispatch::hllc_only: use_exact = false; break;
      case Dispatch::exact_only: use_exact = true; break;
    }
    switch (opts.transform) {
      case TransformPolicy::jump_only: ed.transformed = stiff && ed.jump; break;
      case TransformPolicy::any_stiff: ed.transformed = stiff; break;
      case TransformPolicy::off: ed.transformed = false; break;
    }

    RiemannFan fan;
    if (use_exact) {
      const StarRegion star = solve_star(wl, el, wr, er);
      fan = fan_from_star(star, wl, el, wr, er);
      if (ed.transformed) {
        fan = lagrangian_transform(fan);
        ed.waves = three_waves(fan);
        fluctuations_from_waves(ed);
      } else {
        // Godunov flux differencing: conservative for any fan, including
        // single-speed-represented rarefactions.
        ed.waves = three_waves(fan);
        const PrimitiveState w0 = sample(star, wl, el, wr, er, 0.0);
        const EosParams& e0 = 0.0 < star.u_star ? el : er;
        const auto f0 = flux(w0, e0);
        const auto fl = flux(wl, el);
        const auto fr = flux(wr, er);
        for (int c = 0; c < 3; ++c) {
          ed.amdq[c] = f0[c] - fl[c];
          ed.apdq[c] = fr[c] - f0[c];
        }
      }
    } else {
      fan = hllc_solve(wl, el, wr, er);
      if (ed.transformed) fan = lagrangian_transform(fan);
      ed.waves = three_waves(fan);
      fluctuations_from_waves(ed);
    }
    ed.max_signal = fan.max_signal();
    s_max = std::max(s_max, ed.max_signal);

    if (ed.transformed && e > grid.first_interior() && e <= grid.last_interior()) {
      const auto fl = flux(wl, el);
      const auto fr = flux(wr, er);
      for (int c = 0; c < 3; ++c)
        ed.defect[c] = (fr[c] - fl[c]) - (ed.amdq[c] + ed.apdq[c]);
    }
  }

  const double dt = std::min(opts.cfl * dx / s_max, dt_max);
  const double dtdx = dt / dx;

  // Limited second-order corrections in flux form; suppressed at
  // material-jump edges.
  if (opts.order >= 2) {
    for (int e = grid.first_interior(); e <= grid.last_interior() + 1; ++e) {
      EdgeData& ed = edges[e];
      if (ed.jump) continue;
      for (int w = 0; w < 3; ++w) {
        const Wave& wave = ed.waves[w];
        if (wave.speed == 0.0) continue;
        const double norm2 = dot3(wave.dq, wave.dq);
        if (norm2 == 0.0) continue;
        const int upwind = wave.speed > 0.0 ? e - 1 : e + 1;
        const double theta = dot3(edges[upwind].waves[w].dq, wave.dq) / norm2;
        const double phi = limiter_value(opts.limiter, theta);
        if (phi == 0.0) continue;
        const double s = std::abs(wave.speed);
        const double coef = 0.5 * s * (1.0 - dtdx * s) * phi;
        for (int c = 0; c < 3; ++c) ed.correction[c] += coef * wave.dq[c];
      }
    }
  }

  StepInfo info;
  info.dt = dt;
  info.max_signal = s_max;

  for (int i = grid.first_interior(); i <= grid.last_interior(); ++i) {
    ConservedState& q = state.cells[i];
    const EdgeData& le = edges[i];
    const EdgeData& re = edges[i + 1];
    q.rho -= dtdx * (le.apdq[0] + re.amdq[0] + re.correction[0] - le.correction[0]);
    q.mom -= dtdx * (le.apdq[1] + re.amdq[1] + re.correction[1] - le.correction[1]);
    q.ener -= dtdx * (le.apdq[2] + re.amdq[2] + re.correction[2] - le.correction[2]);
  }

  for (int e = 1; e < n_tot; ++e)
    for (int c = 0; c < 3; ++c) info.interface_defect[c] += dt * edges[e].defect[c];

  for (int i = grid.first_interior(); i <= grid.last_interior(); ++i) {
    try {
      validate(state.cells[i], materials.eos(i));
    } catch (const invalid_state_error& e) {
      std::ostringstream os;
      os << "post-step state invalid in cell " << i - grid.n_ghost << " at x="
         << grid.cell_center(i) << ", t=" << state.time + dt << ": " << e.what();
      throw invalid_state_error(os.str());
    }
  }

  state.time += dt;
  return info;
}

RunStats run_until(SimulationState& state, const Grid1D& grid, const MaterialGrid& materials,
                   double t_end, const SolverOptions& opts, const StepCallback& callback) {
  if (t_end < state.time)
    throw error("run_until: t_end precedes the current time");

  RunStats stats;
  while (state.time < t_end) {
    const double dt_max = t_end - state.time;
    const StepInfo info = step(state, grid, materials, opts, dt_max);
    ++stats.steps;
    for (int c = 0; c < 3; ++c) stats.cumulative_defect[c] += info.interface_defect[c];
    const bool final_step = info.dt == dt_max;
    if (final_step) state.time = t_end;
    if (callback) callback(state, info);
    if (final_step) break;
  }
  return stats;
}

} // namespace mmshock
