// Command-line front end: single runs, width sweeps, Riemann-problem
// diagnostics, and the layered-interface acoustics table.
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mmshock/acoustics.hpp"
#include "mmshock/experiment.hpp"
#include "mmshock/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

using namespace mmshock;

std::string resolve_outdir(const std::string& flag_dir, const std::string& cfg_dir) {
  if (!flag_dir.empty()) return flag_dir;
  if (const char* env = std::getenv("MMSHOCK_OUTPUT_DIR"); env && *env) return env;
  return cfg_dir;
}

std::string kpa(double pa) { return format_number(pa * 1e-3); }

void emit_run_outputs(const RunConfig& cfg, const std::string& dir, const RunResult& run) {
  ensure_directory(dir);
  for (const GaugeTrace& tr : run.traces) write_gauge_csv(dir, cfg.prefix, run.slab_width, tr);
  write_summary_csv(dir, cfg.prefix, run.slab_width, run);
  if (cfg.write_plots) {
    for (const GaugeTrace& tr : run.traces) {
      const std::string csv =
          (std::filesystem::path(dir) / gauge_csv_name(cfg.prefix, tr.id, run.slab_width))
              .string();
      std::ostringstream title;
      title << "gauge " << tr.id << " at x=" << tr.position << " m";
      write_svg_from_csv(csv, csv.substr(0, csv.size() - 4) + ".svg", title.str());
    }
  }
}

void print_summary(const RunResult& run) {
  std::cout << "slab width: " << format_number(run.slab_width) << " m, steps: " << run.steps
            << "\n";
  std::cout << "  initial max: " << kpa(run.initial_max) << " kPa\n";
  for (const GaugeTrace& tr : run.traces)
    std::cout << "  gauge " << tr.id << " (x=" << format_number(tr.position)
              << " m): max " << kpa(tr.max_pressure()) << " kPa\n";
}

int cmd_run(const std::string& config_path, const std::string& outdir_flag, bool verbose) {
  RunConfig cfg;
  try {
    cfg = load_run_config(config_path);
  } catch (const config_error& e) {
    if (e.line() > 0)
      std::cerr << config_path << ":" << e.line() << ": " << e.what() << "\n";
    else
      std::cerr << config_path << ": " << e.what() << "\n";
    return kExitConfig;
  }

  const std::string dir = resolve_outdir(outdir_flag, cfg.output_dir);
  try {
    int frame = 0;
    double next_frame_time = 0.0;
    FrameHook hook;
    if (cfg.snapshot_cadence > 0.0) {
      ensure_directory(dir);
      hook = [&](const SimulationState& s, const Grid1D& g, const MaterialGrid& m) {
        if (s.time + 1e-15 >= next_frame_time) {
          write_snapshot_csv(dir, cfg.prefix, cfg.slab_width(), frame, s, g, m);
          if (cfg.write_plots) {
            const std::string csv =
                (std::filesystem::path(dir) /
                 frame_csv_name(cfg.prefix, frame, cfg.slab_width()))
                    .string();
            std::ostringstream title;
            title << "pressure at t=" << s.time << " s";
            write_svg_from_csv(csv, csv.substr(0, csv.size() - 4) + ".svg", title.str(),
                               0, 3);
          }
          ++frame;
          next_frame_time += cfg.snapshot_cadence;
        }
      };
    }
    const RunResult run = run_scenario(cfg, {}, hook);
    emit_run_outputs(cfg, dir, run);
    print_summary(run);
    if (verbose) {
      std::cout << "  interfaces snapped by up to " << format_number(run.max_snap_distance)
                << " m\n";
      std::cout << "  interface coupling defect (mass, momentum, energy): ("
                << format_number(run.cumulative_defect[0]) << ", "
                << format_number(run.cumulative_defect[1]) << ", "
                << format_number(run.cumulative_defect[2]) << ")\n";
      std::cout << "  outputs in " << dir << "\n";
    }
  } catch (const config_error& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& outdir_flag, int jobs,
              bool verbose) {
  SweepConfig cfg;
  try {
    cfg = load_sweep_config(config_path);
  } catch (const config_error& e) {
    if (e.line() > 0)
      std::cerr << config_path << ":" << e.line() << ": " << e.what() << "\n";
    else
      std::cerr << config_path << ": " << e.what() << "\n";
    return kExitConfig;
  }

  const std::string dir = resolve_outdir(outdir_flag, cfg.base.output_dir);
  try {
    const SweepResult sweep = run_sweep(cfg, jobs);
    ensure_directory(dir);
    write_sweep_csv(dir, cfg.base.prefix, sweep);
    for (size_t k = 0; k < sweep.widths.size(); ++k) {
      if (!sweep.errors[k].empty()) continue;
      for (const GaugeTrace& tr : sweep.runs[k].traces)
        write_gauge_csv(dir, cfg.base.prefix, sweep.widths[k], tr);
      write_summary_csv(dir, cfg.base.prefix, sweep.widths[k], sweep.runs[k]);
    }

    std::cout << "width_m  initial_kPa  gauge2_kPa  gauge3_kPa  gauge4_kPa\n";
    for (size_t k = 0; k < sweep.widths.size(); ++k) {
      std::cout << std::left << std::setw(9) << format_number(sweep.widths[k]);
      if (!sweep.errors[k].empty()) {
        std::cout << "failed: " << sweep.errors[k] << "\n";
        continue;
      }
      const RunResult& r = sweep.runs[k];
      if (verbose)
        std::cout << "(steps=" << r.steps << ") ";
      std::cout << std::setw(13) << kpa(r.initial_max);
      for (int id = 2; id <= 4; ++id) {
        bool found = false;
        for (const GaugeTrace& tr : r.traces)
          if (tr.id == id) {
            std::cout << std::setw(12) << kpa(tr.max_pressure());
            found = true;
          }
        if (!found) std::cout << std::setw(12) << "-";
      }
      std::cout << "\n";
    }

    // Thin-slab versus no-slab comparison at gauge 4, when both are present.
    const auto find_width = [&](auto pred) -> const RunResult* {
      const RunResult* best = nullptr;
      for (size_t k = 0; k < sweep.widths.size(); ++k)
        if (sweep.errors[k].empty() && pred(sweep.widths[k], best))
          best = &sweep.runs[k];
      return best;
    };
    const RunResult* none = find_width(
        [](double w, const RunResult*) { return w == 0.0; });
    const RunResult* thin = find_width([](double w, const RunResult* cur) {
      return w > 0.0 && (!cur || w < cur->slab_width);
    });
    if (none && thin && none->traces.size() >= 4 && thin->traces.size() >= 4) {
      const double g4_none = none->traces[3].max_pressure();
      const double g4_thin = thin->traces[3].max_pressure();
      const double rel = std::abs(g4_thin - g4_none) / g4_none;
      std::cout << "gauge-4 thin (" << format_number(thin->slab_width) << " m) vs none: "
                << kpa(g4_thin) << " vs " << kpa(g4_none) << " kPa, relative difference "
                << format_number(rel * 100.0) << "%\n";
    }
    if (!sweep.all_ok()) return kExitSolver;
  } catch (const config_error& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

struct RiemannArgs {
  std::vector<double> left, right;     // rho,u,p
  std::vector<double> eos_left{1.4, 0.0}, eos_right{1.4, 0.0}; // gamma,p_inf
  bool lagrangian = false;
};

void print_fan(const char* label, const RiemannFan& fan) {
  std::cout << label << ": s_left=" << format_number(fan.s_left)
            << " s_star=" << format_number(fan.s_star)
            << " s_right=" << format_number(fan.s_right)
            << " p_star=" << format_number(fan.p_star) << "\n";
  const auto pr = [](const ConservedState& q) {
    std::ostringstream os;
    os << "(rho=" << format_number(q.rho) << ", mom=" << format_number(q.mom)
       << ", ener=" << format_number(q.ener) << ")";
    return os.str();
  };
  std::cout << "  q*L=" << pr(fan.q_star_left) << "  q*R=" << pr(fan.q_star_right) << "\n";
}

int cmd_riemann(const RiemannArgs& a) {
  try {
    const PrimitiveState wl{a.left[0], a.left[1], a.left[2]};
    const PrimitiveState wr{a.right[0], a.right[1], a.right[2]};
    const EosParams el{a.eos_left[0], a.eos_left[1]};
    const EosParams er{a.eos_right[0], a.eos_right[1]};
    validate(el);
    validate(er);

    const RiemannFan hllc = hllc_solve(wl, el, wr, er);
    const StarRegion star = solve_star(wl, el, wr, er);
    const RiemannFan exact = fan_from_star(star, wl, el, wr, er);
    if (!a.lagrangian) {
      print_fan("hllc        ", hllc);
      print_fan("exact       ", exact);
    }
    print_fan("hllc  (lagr)", lagrangian_transform(hllc));
    print_fan("exact (lagr)", lagrangian_transform(exact));
    std::cout << "exact star: p*=" << format_number(star.p_star)
              << " u*=" << format_number(star.u_star)
              << " rho*L=" << format_number(star.rho_star_left)
              << " rho*R=" << format_number(star.rho_star_right)
              << " waves=" << (star.wave_kind_left == WaveKind::shock ? "shock" : "rarefaction")
              << "/"
              << (star.wave_kind_right == WaveKind::shock ? "shock" : "rarefaction")
              << " (iters=" << star.iterations
              << ", residual=" << format_number(star.residual) << ")\n";
  } catch (const error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

struct AcousticsArgs {
  double p0 = 1.0;
  double width = 0.1;
  int terms = 12;
  std::vector<double> impedances; // za,zp,zw (overrides materials)
  std::vector<std::string> mats{"air", "plastic", "water"};
};

int cmd_acoustics(const AcousticsArgs& a) {
  try {
    Impedance za, zp, zw;
    double cp = 0.0;
    if (a.impedances.size() == 3) {
      za = {a.impedances[0]};
      zp = {a.impedances[1]};
      zw = {a.impedances[2]};
    } else {
      RunConfig defaults;
      const Material& ma = defaults.material(a.mats.at(0));
      const Material& mp = defaults.material(a.mats.at(1));
      const Material& mw = defaults.material(a.mats.at(2));
      za = impedance_of(ma, defaults.ambient_pressure);
      zp = impedance_of(mp, defaults.ambient_pressure);
      zw = impedance_of(mw, defaults.ambient_pressure);
      cp = sound_speed({mp.rho_ref, 0.0, defaults.ambient_pressure}, mp.eos);
    }
    std::cout << "impedances: Z_a=" << format_number(za.z) << " Z_p=" << format_number(zp.z)
              << " Z_w=" << format_number(zw.z) << " (Pa s/m)\n";

    double partial = 0.0;
    std::cout << " n   transmission      partial_sum\n";
    for (int n = 1; n <= a.terms; ++n) {
      const double tn = nth_transmission(a.p0, za, zp, zw, n);
      partial += tn;
      std::cout << std::setw(2) << n << "   " << std::setw(15) << format_number(tn) << "   "
                << format_number(partial) << "\n";
    }
    std::cout << "closed form (middle layer dropped): "
              << format_number(asymptotic_transmission(a.p0, za, zw)) << "\n";
    if (cp > 0.0)
      std::cout << "bounce interval tau for width " << format_number(a.width)
                << " m: " << format_number(bounce_interval(a.width, cp)) << " s\n";
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D multi-material compressible flow: shock transmission through layered media"};
  app.require_subcommand(1);

  std::string config_path;
  std::string outdir;
  int jobs = 0;
  bool verbose = false;

  auto* run = app.add_subcommand("run", "run one configured scenario");
  run->add_option("config", config_path, "configuration file")->required();
  run->add_option("-o,--outdir", outdir, "output directory (default: config, then $MMSHOCK_OUTPUT_DIR)");
  run->add_flag("-v,--verbose", verbose, "print run diagnostics");

  auto* sweep = app.add_subcommand("sweep", "run the slab-width sweep");
  sweep->add_option("config", config_path, "configuration file")->required();
  sweep->add_option("-o,--outdir", outdir, "output directory");
  sweep->add_option("-j,--jobs", jobs, "parallel width jobs (default: hardware)");
  sweep->add_flag("-v,--verbose", verbose, "print run diagnostics");

  RiemannArgs ra;
  auto* riemann = app.add_subcommand("riemann", "solve a single Riemann problem with both solvers");
  riemann->add_option("--left", ra.left, "left state rho,u,p")->expected(3)->delimiter(',')->required();
  riemann->add_option("--right", ra.right, "right state rho,u,p")->expected(3)->delimiter(',')->required();
  riemann->add_option("--eos-left", ra.eos_left, "left EOS gamma,p_inf")->expected(2)->delimiter(',');
  riemann->add_option("--eos-right", ra.eos_right, "right EOS gamma,p_inf")->expected(2)->delimiter(',');
  riemann->add_flag("--lagrangian", ra.lagrangian, "shift both fans to the contact frame");

  AcousticsArgs aa;
  auto* ac = app.add_subcommand("acoustics", "layered-interface transmission table");
  ac->add_option("--p0", aa.p0, "incident amplitude");
  ac->add_option("--width", aa.width, "middle layer width (m)");
  ac->add_option("--terms", aa.terms, "number of transmissions to print");
  ac->add_option("--impedances", aa.impedances, "explicit Z_a,Z_p,Z_w")->expected(3)->delimiter(',');
  ac->add_option("--materials", aa.mats, "material names left,middle,right")->expected(3)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (run->parsed()) return cmd_run(config_path, outdir, verbose);
  if (sweep->parsed()) return cmd_sweep(config_path, outdir, jobs, verbose);
  if (riemann->parsed()) return cmd_riemann(ra);
  if (ac->parsed()) return cmd_acoustics(aa);
  return kExitConfig;
}
