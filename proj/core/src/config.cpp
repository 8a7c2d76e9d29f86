#include "mmshock/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mmshock {

std::vector<Material> default_materials() {
  return {
      {"air", {1.4, 0.0}, 1.204},
      {"plastic", {1.1, 4.79e9}, 1050.0},
      {"water", {7.15, 3.0e8}, 1000.0},
  };
}

double RunConfig::slab_width() const {
  return layout.slabs.empty() ? 0.0 : layout.slabs.front().second;
}

const Material& RunConfig::material(const std::string& name) const {
  for (const Material& m : materials)
    if (m.name == name) return m;
  throw config_error("unknown material '" + name + "'");
}

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

struct Ini {
  // section -> key -> entry; material sections keep their full header name.
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, Entry>>>> sections;

  std::vector<std::pair<std::string, Entry>>* find(const std::string& name) {
    for (auto& [s, kv] : sections)
      if (s == name) return &kv;
    return nullptr;
  }
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Ini read_ini(std::istream& in) {
  Ini ini;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw config_error("unterminated section header", lineno);
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw config_error("empty section name", lineno);
      if (!ini.find(section)) ini.sections.emplace_back(section, std::vector<std::pair<std::string, Entry>>{});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw config_error("expected 'key = value'", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("empty key", lineno);
    if (section.empty()) throw config_error("key outside any [section]", lineno);
    ini.find(section)->emplace_back(key, Entry{value, lineno});
  }
  return ini;
}

double to_double(const Entry& e) {
  try {
    size_t pos = 0;
    const double v = std::stod(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw config_error("expected a number, got '" + e.value + "'", e.line);
  }
}

int to_int(const Entry& e) {
  try {
    size_t pos = 0;
    const int v = std::stoi(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw config_error("expected an integer, got '" + e.value + "'", e.line);
  }
}

bool to_bool(const Entry& e) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  throw config_error("expected a boolean, got '" + e.value + "'", e.line);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Limiter parse_limiter(const Entry& e) {
  if (e.value == "none") return Limiter::none;
  if (e.value == "minmod") return Limiter::minmod;
  if (e.value == "superbee") return Limiter::superbee;
  if (e.value == "mc") return Limiter::mc;
  throw config_error("limiter must be one of none|minmod|superbee|mc", e.line);
}

Dispatch parse_dispatch(const Entry& e) {
  if (e.value == "hybrid") return Dispatch::hybrid;
  if (e.value == "hllc_only") return Dispatch::hllc_only;
  if (e.value == "exact_only") return Dispatch::exact_only;
  throw config_error("dispatch must be one of hybrid|hllc_only|exact_only", e.line);
}

TransformPolicy parse_transform(const Entry& e) {
  if (e.value == "jump_only") return TransformPolicy::jump_only;
  if (e.value == "any_stiff") return TransformPolicy::any_stiff;
  if (e.value == "off") return TransformPolicy::off;
  throw config_error("transform must be one of jump_only|any_stiff|off", e.line);
}

BoundaryKind parse_boundary(const Entry& e) {
  if (e.value == "outflow") return BoundaryKind::outflow;
  if (e.value == "wall") return BoundaryKind::wall;
  throw config_error("boundary must be outflow|wall", e.line);
}

// Parse one layout entry: 'name' (unbounded) or 'name:width'.
std::pair<std::string, double> parse_layer(const std::string& item, int line) {
  const auto colon = item.find(':');
  if (colon == std::string::npos) return {trim(item), -1.0};
  const std::string name = trim(item.substr(0, colon));
  const std::string ws = trim(item.substr(colon + 1));
  try {
    size_t pos = 0;
    const double w = std::stod(ws, &pos);
    if (pos != ws.size()) throw std::invalid_argument("trailing characters");
    return {name, w};
  } catch (const std::exception&) {
    throw config_error("bad layer width '" + ws + "'", line);
  }
}

void apply_sections(const Ini& ini, RunConfig& cfg, bool allow_sweep) {
  bool have_materials = false;
  for (const auto& [section, kv] : ini.sections) {
    if (section.rfind("material ", 0) == 0) {
      if (!have_materials) {
        cfg.materials.clear();
        have_materials = true;
      }
      Material m;
      m.name = trim(section.substr(9));
      if (m.name.empty()) throw config_error("material section needs a name");
      for (const auto& [key, e] : kv) {
        if (key == "gamma") m.eos.gamma = to_double(e);
        else if (key == "p_inf") m.eos.p_inf = to_double(e);
        else if (key == "rho_ref") m.rho_ref = to_double(e);
        else throw config_error("unknown material key '" + key + "'", e.line);
      }
      cfg.materials.push_back(m);
      continue;
    }
    if (section == "grid") {
      for (const auto& [key, e] : kv) {
        if (key == "n_cells") cfg.n_cells = to_int(e);
        else if (key == "x_lower") cfg.x_lower = to_double(e);
        else if (key == "x_upper") cfg.x_upper = to_double(e);
        else throw config_error("unknown [grid] key '" + key + "'", e.line);
      }
    } else if (section == "ambient") {
      for (const auto& [key, e] : kv) {
        if (key == "pressure_kpa") cfg.ambient_pressure = to_double(e) * 1e3;
        else if (key == "pressure_pa") cfg.ambient_pressure = to_double(e);
        else throw config_error("unknown [ambient] key '" + key + "'", e.line);
      }
    } else if (section == "layout") {
      for (const auto& [key, e] : kv) {
        if (key == "layers") {
          const auto items = split_list(e.value);
          if (items.size() < 2)
            throw config_error("layers needs at least 'left, right'", e.line);
          LayeredLayout lay;
          for (size_t i = 0; i < items.size(); ++i) {
            auto [name, width] = parse_layer(items[i], e.line);
            const bool outer = i == 0 || i + 1 == items.size();
            if (outer && width >= 0.0)
              throw config_error("outer layers are unbounded; drop the width", e.line);
            if (!outer && width < 0.0)
              throw config_error("inner layers need an explicit width", e.line);
            if (i == 0) lay.left = name;
            else if (i + 1 == items.size()) lay.right = name;
            else lay.slabs.emplace_back(name, width);
          }
          cfg.layout = lay;
        } else {
          throw config_error("unknown [layout] key '" + key + "'", e.line);
        }
      }
    } else if (section == "shock") {
      for (const auto& [key, e] : kv) {
        if (key == "peak_kpa") cfg.peak_pressure = to_double(e) * 1e3;
        else if (key == "peak_pa") cfg.peak_pressure = to_double(e);
        else if (key == "convention") {
          if (e.value == "absolute") cfg.peak_is_absolute = true;
          else if (e.value == "overpressure") cfg.peak_is_absolute = false;
          else throw config_error("convention must be absolute|overpressure", e.line);
        } else if (key == "front_m") cfg.front = to_double(e);
        else if (key == "plateau_m") cfg.plateau = to_double(e);
        else if (key == "crest_m") cfg.crest = to_double(e);
        else if (key == "crest_drop_kpa") cfg.crest_drop = to_double(e) * 1e3;
        else if (key == "shoulder_m") cfg.shoulder = to_double(e);
        else if (key == "shoulder_drop_kpa") cfg.shoulder_drop = to_double(e) * 1e3;
        else if (key == "ramp_m") cfg.ramp = to_double(e);
        else throw config_error("unknown [shock] key '" + key + "'", e.line);
      }
    } else if (section == "gauges") {
      for (const auto& [key, e] : kv) {
        if (key == "positions_m") {
          cfg.gauge_positions.clear();
          for (const auto& item : split_list(e.value)) {
            try {
              cfg.gauge_positions.push_back(std::stod(item));
            } catch (const std::exception&) {
              throw config_error("bad gauge position '" + item + "'", e.line);
            }
          }
        } else {
          throw config_error("unknown [gauges] key '" + key + "'", e.line);
        }
      }
    } else if (section == "time") {
      for (const auto& [key, e] : kv) {
        if (key == "t_end_s") cfg.t_end = to_double(e);
        else if (key == "cfl") cfg.solver.cfl = to_double(e);
        else throw config_error("unknown [time] key '" + key + "'", e.line);
      }
    } else if (section == "solver") {
      for (const auto& [key, e] : kv) {
        if (key == "limiter") cfg.solver.limiter = parse_limiter(e);
        else if (key == "order") cfg.solver.order = to_int(e);
        else if (key == "dispatch") cfg.solver.dispatch = parse_dispatch(e);
        else if (key == "transform") cfg.solver.transform = parse_transform(e);
        else if (key == "bc_left") cfg.solver.bc_left = parse_boundary(e);
        else if (key == "bc_right") cfg.solver.bc_right = parse_boundary(e);
        else throw config_error("unknown [solver] key '" + key + "'", e.line);
      }
    } else if (section == "output") {
      for (const auto& [key, e] : kv) {
        if (key == "dir") cfg.output_dir = e.value;
        else if (key == "prefix") cfg.prefix = e.value;
        else if (key == "snapshot_cadence_s") cfg.snapshot_cadence = to_double(e);
        else if (key == "write_plots") cfg.write_plots = to_bool(e);
        else throw config_error("unknown [output] key '" + key + "'", e.line);
      }
    } else if (section == "sweep") {
      if (!allow_sweep) throw config_error("[sweep] section is only valid for the sweep command");
      // handled by parse_sweep_config
    } else {
      throw config_error("unknown section [" + section + "]");
    }
  }
}

} // namespace

void validate_config(const RunConfig& cfg) {
  if (cfg.n_cells <= 0) throw config_error("grid: n_cells must be positive");
  if (!(cfg.x_upper > cfg.x_lower)) throw config_error("grid: x_upper must exceed x_lower");
  if (cfg.materials.empty()) throw config_error("no materials defined");
  for (const Material& m : cfg.materials) {
    try {
      validate(m.eos);
    } catch (const invalid_state_error& e) {
      throw config_error(std::string("material '") + m.name + "': " + e.what());
    }
    if (!(m.rho_ref > 0.0))
      throw config_error("material '" + m.name + "': rho_ref must be positive");
  }
  cfg.material(cfg.layout.left);
  cfg.material(cfg.layout.right);
  for (const auto& [name, width] : cfg.layout.slabs) {
    cfg.material(name);
    if (width < 0.0) throw config_error("layout: slab widths must be >= 0");
  }
  if (cfg.peak_overpressure() < 0.0)
    throw config_error("shock: peak must not be below ambient");
  if (cfg.plateau < 0.0 || cfg.crest < 0.0 || cfg.shoulder < 0.0 || cfg.ramp < 0.0)
    throw config_error("shock: segment lengths must be >= 0");
  if (cfg.crest_drop < 0.0 || cfg.shoulder_drop < 0.0 ||
      cfg.crest_drop + cfg.shoulder_drop > cfg.peak_overpressure())
    throw config_error("shock: segment drops must be >= 0 and sum below the peak");
  if (cfg.t_end < 0.0) throw config_error("time: t_end_s must be >= 0");
  if (!(cfg.solver.cfl > 0.0 && cfg.solver.cfl < 1.0))
    throw config_error("time: cfl must lie in (0, 1)");
  if (cfg.solver.order != 1 && cfg.solver.order != 2)
    throw config_error("solver: order must be 1 or 2");
  for (double g : cfg.gauge_positions)
    if (!(g >= cfg.x_lower && g <= cfg.x_upper))
      throw config_error("gauge position outside the domain");
  if (cfg.snapshot_cadence < 0.0) throw config_error("output: snapshot cadence must be >= 0");
}

RunConfig parse_run_config(std::istream& in) {
  const Ini ini = read_ini(in);
  RunConfig cfg;
  apply_sections(ini, cfg, false);
  validate_config(cfg);
  return cfg;
}

SweepConfig parse_sweep_config(std::istream& in) {
  Ini ini = read_ini(in);
  SweepConfig sw;
  apply_sections(ini, sw.base, true);
  if (auto* kv = ini.find("sweep")) {
    for (const auto& [key, e] : *kv) {
      if (key == "widths_m") {
        sw.widths.clear();
        for (const auto& item : split_list(e.value)) {
          try {
            sw.widths.push_back(std::stod(item));
          } catch (const std::exception&) {
            throw config_error("bad sweep width '" + item + "'", e.line);
          }
        }
      } else {
        throw config_error("unknown [sweep] key '" + key + "'", e.line);
      }
    }
  }
  if (sw.widths.empty()) throw config_error("sweep: widths_m must not be empty");
  for (double w : sw.widths)
    if (w < 0.0) throw config_error("sweep: widths must be >= 0");
  std::sort(sw.widths.rbegin(), sw.widths.rend());
  validate_config(sw.base);
  return sw;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  return in;
}

} // namespace

RunConfig load_run_config(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_run_config(in);
}

SweepConfig load_sweep_config(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_sweep_config(in);
}

} // namespace mmshock
