#include "oamdim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace oamdim {

namespace {

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open for reading");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::vector<double> number_array(const nlohmann::json& j, const std::string& path,
                                 const std::string& field) {
  if (!j.contains(field)) throw IoError(path + ": missing field \"" + field + "\"");
  const auto& arr = j.at(field);
  if (!arr.is_array()) throw IoError(path + ": " + field + ": expected an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw IoError(path + ": " + field + "[" + std::to_string(i) + "]: expected a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << text;
  if (!out) throw IoError(path + ": write failed");
}

}  // namespace

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

SectorPlate load_plate(const std::string& path) {
  const nlohmann::json j = parse_json_file(path);
  if (!j.is_object()) throw IoError(path + ": expected a JSON object");
  std::vector<double> boundaries = number_array(j, path, "boundaries_rad");
  std::vector<double> phases = number_array(j, path, "phases_rad");
  if (boundaries.empty()) throw IoError(path + ": boundaries_rad: must not be empty");
  if (boundaries.size() != phases.size()) {
    throw IoError(path + ": phases_rad: expected " + std::to_string(boundaries.size()) +
                  " entries to match boundaries_rad, got " + std::to_string(phases.size()));
  }
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (!(boundaries[i] >= 0.0) || !(boundaries[i] < kTwoPi)) {
      throw IoError(path + ": boundaries_rad[" + std::to_string(i) +
                    "]: out of range [0, 2*pi)");
    }
    if (i > 0 && !(boundaries[i] > boundaries[i - 1])) {
      throw IoError(path + ": boundaries_rad[" + std::to_string(i) +
                    "]: not strictly increasing");
    }
  }
  try {
    return SectorPlate::from_sectors(std::move(boundaries), std::move(phases));
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

void save_plate(const SectorPlate& plate, const std::string& path) {
  nlohmann::ordered_json j;
  j["boundaries_rad"] = plate.boundaries();
  j["phases_rad"] = plate.phases();
  write_text(path, j.dump(2) + "\n");
}

void write_fringe_csv(const Fringe& fringe, const std::string& path) {
  std::string text = "delta_rad,rate\n";
  for (std::size_t j = 0; j < fringe.size(); ++j) {
    text += format_full(fringe.delta_rad(j));
    text += ',';
    text += format_full(fringe.rates[j]);
    text += '\n';
  }
  write_text(path, text);
}

Fringe read_fringe_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::string line;
  if (!std::getline(in, line) || line != "delta_rad,rate") {
    throw IoError(path + ": expected header \"delta_rad,rate\"");
  }
  std::vector<double> deltas;
  std::vector<double> rates;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": expected two columns");
    }
    try {
      deltas.push_back(std::stod(line.substr(0, comma)));
      rates.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": malformed number");
    }
    if (!(rates.back() >= 0.0)) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": negative rate");
    }
  }
  if (deltas.empty()) throw IoError(path + ": no samples");
  const std::size_t n = deltas.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double expected = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    if (std::fabs(deltas[j] - expected) > 1e-9) {
      throw IoError(path + ": line " + std::to_string(j + 2) +
                    ": grid is not the uniform [0, 2*pi) grid");
    }
  }
  return Fringe{std::move(rates)};
}

std::string spectrum_csv(const ModeSpectrum& spectrum) {
  std::string text = "l,re_c,im_c,gamma\n";
  for (int l = -spectrum.l_max(); l <= spectrum.l_max(); ++l) {
    const auto c = spectrum.coefficient(l);
    text += std::to_string(l);
    text += ',';
    text += format_full(c.real());
    text += ',';
    text += format_full(c.imag());
    text += ',';
    text += format_full(spectrum.gamma(l));
    text += '\n';
  }
  return text;
}

std::string spectrum_table(const ModeSpectrum& spectrum) {
  std::string text = "     l        re_c        im_c       gamma\n";
  char buf[128];
  for (int l = -spectrum.l_max(); l <= spectrum.l_max(); ++l) {
    const auto c = spectrum.coefficient(l);
    std::snprintf(buf, sizeof buf, "%6d  %10.6f  %10.6f  %10.6f\n", l, c.real(), c.imag(),
                  spectrum.gamma(l));
    text += buf;
  }
  return text;
}

std::vector<double> read_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
      try {
        weights.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw IoError(path + ": line " + std::to_string(line_no) + ": malformed number \"" +
                      token + "\"");
      }
    }
  }
  if (weights.empty()) throw IoError(path + ": no weights");
  return weights;
}

std::string report_json(const OptimizationReport& report) {
  nlohmann::ordered_json j;
  j["n_mesas"] = report.n_mesas;
  j["boundaries_rad"] = report.best_plate.boundaries();
  j["dimension"] = report.best_dimension;
  j["evaluations"] = report.evaluations;
  j["seed"] = report.seed;
  j["refinement_iterations"] = report.refinement_iterations;
  j["l_max_used"] = report.l_max_used;
  return j.dump(2) + "\n";
}

void write_report_json(const OptimizationReport& report, const std::string& path) {
  write_text(path, report_json(report));
}

void write_sweep_csv(const std::vector<OptimizationReport>& reports, const std::string& path) {
  std::string text = "n,dimension_max\n";
  for (const auto& r : reports) {
    text += std::to_string(r.n_mesas);
    text += ',';
    text += format_full(r.best_dimension);
    text += '\n';
  }
  write_text(path, text);
}

}  // namespace oamdim
