#ifndef OAMDIM_IO_HPP
#define OAMDIM_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "oamdim/fringe.hpp"
#include "oamdim/optimize.hpp"
#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

namespace oamdim {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plate files: { "boundaries_rad": [...], "phases_rad": [...] }.
/// The reader reports the offending field (and index) on invalid input.
SectorPlate load_plate(const std::string& path);
void save_plate(const SectorPlate& plate, const std::string& path);

/// Fringe CSV: header "delta_rad,rate", one row per grid point, full
/// precision. The reader checks the uniform [0, 2*pi) grid and nonnegative
/// rates.
void write_fringe_csv(const Fringe& fringe, const std::string& path);
Fringe read_fringe_csv(const std::string& path);

/// Spectrum records {l, re_c, im_c, gamma} as CSV or a fixed-width table.
std::string spectrum_csv(const ModeSpectrum& spectrum);
std::string spectrum_table(const ModeSpectrum& spectrum);

/// Whitespace-separated nonnegative weights; '#' starts a comment line.
std::vector<double> read_weights(const std::string& path);

std::string report_json(const OptimizationReport& report);
void write_report_json(const OptimizationReport& report, const std::string& path);

/// Sweep CSV: header "n,dimension_max".
void write_sweep_csv(const std::vector<OptimizationReport>& reports, const std::string& path);

/// Fixed 6-decimal formatting for tables.
std::string format_fixed(double value);
/// Shortest round-trip formatting (%.17g) for CSV payloads.
std::string format_full(double value);

}  // namespace oamdim

#endif  // OAMDIM_IO_HPP
