#ifndef MMSHOCK_OUTPUT_HPP
#define MMSHOCK_OUTPUT_HPP

#include <string>
#include <vector>

#include "mmshock/experiment.hpp"

namespace mmshock {

// Deterministic number formatting shared by all CSV writers: re-running a
// config reproduces byte-identical files.
std::string format_number(double v);

// One file per gauge, schema: time_s,pressure_kPa. The file name embeds the
// gauge id and the slab width: <prefix>_gauge<id>_w<width>.csv.
std::string gauge_csv_name(const std::string& prefix, int gauge_id, double width);
void write_gauge_csv(const std::string& dir, const std::string& prefix, double width,
                     const GaugeTrace& trace);

// Snapshot frame, schema: x_m,rho,u,p_kPa,material.
std::string frame_csv_name(const std::string& prefix, int frame, double width);
void write_snapshot_csv(const std::string& dir, const std::string& prefix, double width,
                        int frame, const SimulationState& state, const Grid1D& grid,
                        const MaterialGrid& materials);

// Per-run summary, schema: quantity,position_m,max_kPa with rows for the
// initial pulse and every gauge.
void write_summary_csv(const std::string& dir, const std::string& prefix, double width,
                       const RunResult& run);

// Sweep table, schema: width_m,initial_kPa,gauge2_kPa,gauge3_kPa,gauge4_kPa
// (columns past the available gauges are left empty).
void write_sweep_csv(const std::string& dir, const std::string& prefix,
                     const SweepResult& sweep);

// Minimal SVG line plot generated from an existing CSV; x_col and y_col
// select the plotted columns (defaults fit the gauge schema).
void write_svg_from_csv(const std::string& csv_path, const std::string& svg_path,
                        const std::string& title, int x_col = 0, int y_col = 1);

void ensure_directory(const std::string& dir);

} // namespace mmshock

#endif
