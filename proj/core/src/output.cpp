#include "mmshock/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace mmshock {

namespace {

std::string width_tag(double width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "w%.2f", width);
  return buf;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  const std::filesystem::path p = std::filesystem::path(dir) / name;
  std::ofstream out(p);
  if (!out) throw error("cannot write '" + p.string() + "'");
  return out;
}

} // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw error("cannot create output directory '" + dir + "': " + ec.message());
}

std::string gauge_csv_name(const std::string& prefix, int gauge_id, double width) {
  std::ostringstream os;
  os << prefix << "_gauge" << gauge_id << "_" << width_tag(width) << ".csv";
  return os.str();
}

void write_gauge_csv(const std::string& dir, const std::string& prefix, double width,
                     const GaugeTrace& trace) {
  auto out = open_out(dir, gauge_csv_name(prefix, trace.id, width));
  out << "time_s,pressure_kPa\n";
  for (const auto& [t, p] : trace.samples)
    out << format_number(t) << ',' << format_number(p * 1e-3) << '\n';
}

std::string frame_csv_name(const std::string& prefix, int frame, double width) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s_frame%05d_%s.csv", prefix.c_str(), frame,
                width_tag(width).c_str());
  return buf;
}

void write_snapshot_csv(const std::string& dir, const std::string& prefix, double width,
                        int frame, const SimulationState& state, const Grid1D& grid,
                        const MaterialGrid& materials) {
  auto out = open_out(dir, frame_csv_name(prefix, frame, width));
  out << "x_m,rho,u,p_kPa,material\n";
  for (int i = grid.first_interior(); i <= grid.last_interior(); ++i) {
    const PrimitiveState w = primitive_from_conserved(state.cells[i], materials.eos(i));
    out << format_number(grid.cell_center(i)) << ',' << format_number(w.rho) << ','
        << format_number(w.u) << ',' << format_number(w.p * 1e-3) << ','
        << materials.material(i).name << '\n';
  }
}

void write_summary_csv(const std::string& dir, const std::string& prefix, double width,
                       const RunResult& run) {
  std::ostringstream name;
  name << prefix << "_summary_" << width_tag(width) << ".csv";
  auto out = open_out(dir, name.str());
  out << "quantity,position_m,max_kPa\n";
  out << "initial,," << format_number(run.initial_max * 1e-3) << '\n';
  for (const GaugeTrace& tr : run.traces)
    out << "gauge" << tr.id << ',' << format_number(tr.position) << ','
        << format_number(tr.max_pressure() * 1e-3) << '\n';
}

void write_sweep_csv(const std::string& dir, const std::string& prefix,
                     const SweepResult& sweep) {
  auto out = open_out(dir, prefix + "_sweep.csv");
  out << "width_m,initial_kPa,gauge2_kPa,gauge3_kPa,gauge4_kPa\n";
  for (size_t k = 0; k < sweep.widths.size(); ++k) {
    out << format_number(sweep.widths[k]) << ',';
    if (!sweep.errors[k].empty()) {
      out << "error,error,error\n";
      continue;
    }
    const RunResult& r = sweep.runs[k];
    out << format_number(r.initial_max * 1e-3);
    for (int id = 2; id <= 4; ++id) {
      out << ',';
      for (const GaugeTrace& tr : r.traces)
        if (tr.id == id) out << format_number(tr.max_pressure() * 1e-3);
    }
    out << '\n';
  }
}

void write_svg_from_csv(const std::string& csv_path, const std::string& svg_path,
                        const std::string& title, int x_col, int y_col) {
  std::ifstream in(csv_path);
  if (!in) throw error("cannot read '" + csv_path + "'");
  std::string line;
  std::getline(in, line); // header
  std::vector<std::pair<double, double>> pts;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    size_t start = 0;
    for (size_t c = line.find(','); ; c = line.find(',', start)) {
      cols.push_back(line.substr(start, c - start));
      if (c == std::string::npos) break;
      start = c + 1;
    }
    if (static_cast<int>(cols.size()) <= std::max(x_col, y_col)) continue;
    try {
      pts.emplace_back(std::stod(cols[x_col]), std::stod(cols[y_col]));
    } catch (const std::exception&) {
      continue;
    }
  }
  std::ofstream out(svg_path);
  if (!out) throw error("cannot write '" + svg_path + "'");

  const double W = 720, H = 440, ml = 70, mr = 20, mt = 40, mb = 50;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& [x, y] : pts) {
    xmin = std::min(xmin, x); xmax = std::max(xmax, x);
    ymin = std::min(ymin, y); ymax = std::max(ymax, y);
  }
  if (pts.empty()) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad; ymax += pad;

  auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto sy = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << title << "</text>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
      << H - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
      << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + k * (xmax - xmin) / 4;
    const double yv = ymin + k * (ymax - ymin) / 4;
    out << "<text x=\"" << sx(xv) << "\" y=\"" << H - mb + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << format_number(xv) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(yv) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(yv) << "</text>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.4\" points=\"";
  for (const auto& [x, y] : pts) out << sx(x) << ',' << sy(y) << ' ';
  out << "\"/>\n</svg>\n";
}

} // namespace mmshock
