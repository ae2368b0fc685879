#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oamdim/dimension.hpp"
#include "oamdim/fringe.hpp"
#include "oamdim/io.hpp"
#include "oamdim/optimize.hpp"
#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

namespace py = pybind11;
using namespace oamdim;

namespace {

LmaxOptions make_lmax(double residual, std::int64_t cap) { return LmaxOptions{residual, cap}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sector-plate OAM analyzers: mode spectra, Shannon dimensionality, "
            "coincidence fringes and plate optimization";

  py::class_<SectorPlate>(m, "SectorPlate")
      .def(py::init([](std::vector<double> boundaries, std::vector<double> phases) {
             return SectorPlate::from_sectors(std::move(boundaries), std::move(phases));
           }),
           py::arg("boundaries_rad"), py::arg("phases_rad"))
      .def_static("uniform", &SectorPlate::uniform)
      .def_static(
          "single_sector", [](double delta) { return SectorPlate::single_sector(delta); },
          py::arg("delta_rad"))
      .def_static(
          "alternating",
          [](std::vector<double> b) { return SectorPlate::alternating(std::move(b)); },
          py::arg("boundaries_rad"))
      .def(
          "rotated", [](const SectorPlate& p, double alpha) { return p.rotated(alpha); },
          py::arg("alpha_rad"))
      .def(
          "transmission",
          [](const SectorPlate& p, double theta) { return p.transmission(theta); },
          py::arg("theta_rad"))
      .def_property_readonly("boundaries_rad", &SectorPlate::boundaries)
      .def_property_readonly("phases_rad", &SectorPlate::phases)
      .def_property_readonly("sector_count", &SectorPlate::sector_count)
      .def(
          "approx_equal",
          [](const SectorPlate& a, const SectorPlate& b, double tol) {
            return approx_equal(a, b, tol);
          },
          py::arg("other"), py::arg("tol") = kAngleTol)
      .def("__repr__", [](const SectorPlate& p) {
        return "SectorPlate(" + std::to_string(p.sector_count()) + " sectors)";
      });

  py::class_<ModeSpectrum>(m, "ModeSpectrum")
      .def(py::init<int, std::vector<std::complex<double>>>(), py::arg("l_max"),
           py::arg("coefficients"))
      .def_property_readonly("l_max", &ModeSpectrum::l_max)
      .def("coefficient", &ModeSpectrum::coefficient, py::arg("l"))
      .def("gamma", &ModeSpectrum::gamma, py::arg("l"))
      .def_property_readonly("coefficients", &ModeSpectrum::coefficients);

  py::class_<QuadratureSpectrum>(m, "QuadratureSpectrum")
      .def_readonly("spectrum", &QuadratureSpectrum::spectrum)
      .def_readonly("max_panel_width", &QuadratureSpectrum::max_panel_width)
      .def("error_bound", &QuadratureSpectrum::error_bound, py::arg("l"));

  py::class_<SourceSpectrum>(m, "SourceSpectrum")
      .def_static("from_weights", &SourceSpectrum::from_weights, py::arg("weights"))
      .def_static("flat", &SourceSpectrum::flat, py::arg("l_max"))
      .def_static("gaussian", &SourceSpectrum::gaussian, py::arg("l_max"), py::arg("sigma"))
      .def_property_readonly("l_max", &SourceSpectrum::l_max)
      .def("weight", &SourceSpectrum::weight, py::arg("l"))
      .def("peak_weight", &SourceSpectrum::peak_weight, py::arg("l"));

  py::class_<Fringe>(m, "Fringe")
      .def(py::init([](std::vector<double> rates) { return Fringe{std::move(rates)}; }),
           py::arg("rates"))
      .def_readonly("rates", &Fringe::rates)
      .def("delta_rad", &Fringe::delta_rad, py::arg("j"))
      .def("__len__", &Fringe::size);

  py::class_<AnalyzerDimension>(m, "AnalyzerDimension")
      .def_readonly("dimension", &AnalyzerDimension::dimension)
      .def_readonly("l_max", &AnalyzerDimension::l_max)
      .def_readonly("captured", &AnalyzerDimension::captured);

  py::class_<OptimizationReport>(m, "OptimizationReport")
      .def_readonly("n_mesas", &OptimizationReport::n_mesas)
      .def_readonly("best_plate", &OptimizationReport::best_plate)
      .def_readonly("best_dimension", &OptimizationReport::best_dimension)
      .def_readonly("evaluations", &OptimizationReport::evaluations)
      .def_readonly("seed", &OptimizationReport::seed)
      .def_readonly("refinement_iterations", &OptimizationReport::refinement_iterations)
      .def_readonly("l_max_used", &OptimizationReport::l_max_used)
      .def_readonly("random_best_dimension", &OptimizationReport::random_best_dimension)
      .def_readonly("trace", &OptimizationReport::trace);

  m.def("mode_spectrum", &mode_spectrum, py::arg("plate"), py::arg("l_max"));
  m.def("mode_spectrum_quadrature", &mode_spectrum_quadrature, py::arg("plate"),
        py::arg("l_max"), py::arg("samples"));
  m.def("truncate_spectrum", &truncate_spectrum, py::arg("spectrum"), py::arg("l_cut"));
  m.def("captured_power", &captured_power, py::arg("spectrum"));
  m.def(
      "default_l_max",
      [](const SectorPlate& p, double residual, std::int64_t cap) {
        return default_l_max(p, make_lmax(residual, cap));
      },
      py::arg("plate"), py::arg("residual") = 1e-6, py::arg("cap") = std::int64_t{1} << 23);

  m.def("shannon_dimension", &shannon_dimension, py::arg("spectrum"));
  m.def("schmidt_number", &schmidt_number, py::arg("source"));
  m.def("single_sector_dimension", &single_sector_dimension, py::arg("delta_rad"));
  m.def(
      "analyzer_dimension",
      [](const SectorPlate& p, double residual, std::int64_t cap) {
        return analyzer_dimension(p, make_lmax(residual, cap));
      },
      py::arg("plate"), py::arg("residual") = 1e-6, py::arg("cap") = std::int64_t{1} << 23);
  m.def(
      "windowed_dimension",
      [](const SectorPlate& p, double residual, std::int64_t cap) {
        return windowed_dimension(p, make_lmax(residual, cap));
      },
      py::arg("plate"), py::arg("residual") = 1e-6, py::arg("cap") = std::int64_t{1} << 23);

  m.def(
      "coincidence_fringe",
      [](const ModeSpectrum& a, const ModeSpectrum& b, const SourceSpectrum& s, long samples) {
        return coincidence_fringe(a, b, s, samples);
      },
      py::arg("spec_a"), py::arg("spec_b"), py::arg("source"), py::arg("samples"));
  m.def(
      "coincidence_fringe",
      [](const SectorPlate& a, const SectorPlate& b, long samples) {
        return coincidence_fringe(a, b, samples);
      },
      py::arg("plate_a"), py::arg("plate_b"), py::arg("samples"));
  m.def(
      "analyzer_overlap",
      [](const ModeSpectrum& s, double xi, double xi_prime) {
        return analyzer_overlap(s, xi, xi_prime);
      },
      py::arg("spectrum"), py::arg("xi_rad"), py::arg("xi_prime_rad"));
  m.def("overlap_fringe_oracle", &overlap_fringe_oracle, py::arg("plate_a"), py::arg("plate_b"),
        py::arg("samples"), py::arg("quad_points"));
  m.def("visibility", &visibility, py::arg("fringe"));
  m.def("fringe_dimension", &fringe_dimension, py::arg("fringe"));

  m.def(
      "evaluate_candidate",
      [](const std::vector<double>& boundaries, double residual, std::int64_t cap) {
        return evaluate_candidate(boundaries, make_lmax(residual, cap));
      },
      py::arg("boundaries_rad"), py::arg("residual") = 1e-4,
      py::arg("cap") = std::int64_t{1} << 23);
  m.def(
      "optimize_plate",
      [](int n_mesas, long budget, std::uint64_t seed, int restarts, unsigned threads,
         bool refine, bool record_trace) {
        OptimizeOptions options;
        options.budget = budget;
        options.seed = seed;
        options.restarts = restarts;
        options.threads = threads;
        options.refine = refine;
        options.record_trace = record_trace;
        return optimize_plate(n_mesas, options);
      },
      py::arg("n_mesas"), py::arg("budget") = 2000, py::arg("seed") = 1,
      py::arg("restarts") = 4, py::arg("threads") = 0, py::arg("refine") = true,
      py::arg("record_trace") = false, py::call_guard<py::gil_scoped_release>());
  m.def(
      "dimension_vs_sectors",
      [](int n_max, long budget_per_n, std::uint64_t seed, int restarts) {
        OptimizeOptions base;
        base.restarts = restarts;
        return dimension_vs_sectors(n_max, budget_per_n, seed, base);
      },
      py::arg("n_max"), py::arg("budget_per_n") = 2000, py::arg("seed") = 1,
      py::arg("restarts") = 4, py::call_guard<py::gil_scoped_release>());

  m.def("load_plate", &load_plate, py::arg("path"));
  m.def("save_plate", &save_plate, py::arg("plate"), py::arg("path"));
  m.def("write_fringe_csv", &write_fringe_csv, py::arg("fringe"), py::arg("path"));
  m.def("read_fringe_csv", &read_fringe_csv, py::arg("path"));

  m.attr("TWO_PI") = kTwoPi;
  m.attr("__version__") = "0.1.0";
}
