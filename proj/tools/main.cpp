#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oamdim/dimension.hpp"
#include "oamdim/fringe.hpp"
#include "oamdim/io.hpp"
#include "oamdim/optimize.hpp"
#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

namespace {

using namespace oamdim;

struct GlobalFlags {
  bool radians = false;

  // Degree inputs like 360 land a few ulp past 2*pi after conversion; snap
  // them back so range checks see the intended endpoint.
  double to_radians(double angle) const {
    double r = radians ? angle : angle * kPi / 180.0;
    if (r > kTwoPi && r < kTwoPi + 1e-9) r = kTwoPi;
    if (r < 0.0 && r > -1e-9) r = 0.0;
    return r;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError(out_path + ": cannot open for writing");
    out << text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Sector-plate OAM analyzers: mode spectra, Shannon dimensionality, "
               "coincidence fringes and plate optimization"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --radians appear after the subcommand name
  GlobalFlags global;
  app.add_flag("--radians", global.radians,
               "interpret command-line angles as radians (default: degrees)");

  // dim
  auto* dim = app.add_subcommand("dim", "Shannon dimensionality of a plate analyzer");
  std::string dim_plate;
  double dim_residual = 1e-6;
  std::optional<int> dim_l_max;
  dim->add_option("plate", dim_plate, "plate JSON file")->required();
  dim->add_option("--residual", dim_residual, "Parseval residual for the l_max rule");
  dim->add_option("--l-max", dim_l_max, "fixed spectral window instead of the residual rule");
  dim->callback([&] {
    const SectorPlate plate = load_plate(dim_plate);
    if (dim_l_max) {
      const ModeSpectrum spectrum = mode_spectrum(plate, *dim_l_max);
      std::printf("D = %s\n", format_fixed(shannon_dimension(spectrum)).c_str());
      std::printf("l_max = %d\n", spectrum.l_max());
      std::printf("captured_power = %s\n", format_fixed(captured_power(spectrum)).c_str());
    } else {
      const AnalyzerDimension result = analyzer_dimension(plate, LmaxOptions{dim_residual});
      std::printf("D = %s\n", format_fixed(result.dimension).c_str());
      std::printf("l_max = %lld\n", static_cast<long long>(result.l_max));
      std::printf("captured_power = %s\n", format_fixed(result.captured).c_str());
    }
  });

  // spectrum
  auto* spect = app.add_subcommand("spectrum", "OAM mode spectrum of a plate");
  std::string spec_plate, spec_out, spec_format = "csv";
  int spec_l_max = 32;
  std::optional<double> spec_residual;
  spect->add_option("plate", spec_plate, "plate JSON file")->required();
  spect->add_option("--l-max", spec_l_max, "spectral window (default 32)");
  spect->add_option("--residual", spec_residual, "pick l_max by Parseval residual instead");
  spect->add_option("--out", spec_out, "output file (default: stdout)");
  spect->add_option("--format", spec_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));
  spect->callback([&] {
    const SectorPlate plate = load_plate(spec_plate);
    int l_max = spec_l_max;
    if (spec_residual) {
      l_max = static_cast<int>(default_l_max(plate, LmaxOptions{*spec_residual}));
    }
    const ModeSpectrum spectrum = mode_spectrum(plate, l_max);
    emit(spec_format == "csv" ? spectrum_csv(spectrum) : spectrum_table(spectrum), spec_out);
  });

  // fringe
  auto* fr = app.add_subcommand("fringe", "two-photon coincidence fringe for a plate pair");
  std::string fr_a, fr_b, fr_out, fr_source = "flat";
  std::optional<long> fr_samples;
  std::optional<int> fr_l_cut, fr_l_max, fr_source_l_max;
  double fr_sigma = 10.0;
  fr->add_option("plate_a", fr_a, "plate JSON file, analyzer A")->required();
  fr->add_option("plate_b", fr_b, "plate JSON file, analyzer B")->required();
  fr->add_option("--samples", fr_samples, "grid points over [0, 2*pi)");
  fr->add_option("--l-cut", fr_l_cut, "hard OAM cutoff applied to both analyzers (aperture)");
  fr->add_option("--l-max", fr_l_max, "analyzer spectral window for the modal route");
  fr->add_option("--source", fr_source, "flat | gaussian")
      ->check(CLI::IsMember({"flat", "gaussian"}));
  fr->add_option("--source-l-max", fr_source_l_max, "source window (modal route)");
  fr->add_option("--source-sigma", fr_sigma, "gaussian source width in l (default 10)");
  fr->add_option("--out", fr_out, "fringe CSV output path");
  fr->callback([&] {
    const SectorPlate a = load_plate(fr_a);
    const SectorPlate b = load_plate(fr_b);
    const bool modal = fr_l_cut || fr_l_max || fr_source != "flat" || fr_source_l_max;
    Fringe fringe;
    if (modal) {
      const int l_max = fr_l_max.value_or(512);
      ModeSpectrum sa = mode_spectrum(a, l_max);
      ModeSpectrum sb = mode_spectrum(b, l_max);
      if (fr_l_cut) {
        sa = truncate_spectrum(sa, *fr_l_cut);
        sb = truncate_spectrum(sb, *fr_l_cut);
      }
      const int window = fr_source_l_max.value_or(std::max(sa.l_max(), sb.l_max()));
      const SourceSpectrum source = fr_source == "flat"
                                        ? SourceSpectrum::flat(window)
                                        : SourceSpectrum::gaussian(window, fr_sigma);
      const long samples = fr_samples.value_or(4L * std::max(sa.l_max(), sb.l_max()) + 9);
      fringe = coincidence_fringe(sa, sb, source, samples);
    } else {
      fringe = coincidence_fringe(a, b, fr_samples.value_or(65537));
    }
    if (!fr_out.empty()) write_fringe_csv(fringe, fr_out);
    std::printf("visibility = %s\n", format_fixed(visibility(fringe)).c_str());
    std::printf("D = %s\n", format_fixed(fringe_dimension(fringe)).c_str());
  });

  // analytic
  auto* an = app.add_subcommand("analytic", "closed-form D(delta) for single-sector plates");
  std::optional<double> an_delta, an_from, an_to, an_step;
  std::string an_out;
  an->add_option("--delta", an_delta, "single sector angle");
  an->add_option("--sweep-from", an_from, "sweep start angle");
  an->add_option("--sweep-to", an_to, "sweep end angle (inclusive)");
  an->add_option("--sweep-step", an_step, "sweep step");
  an->add_option("--out", an_out, "CSV output path (default: stdout)");
  an->callback([&] {
    if (an_delta) {
      const double d = global.to_radians(*an_delta);
      std::printf("D = %s\n", format_fixed(single_sector_dimension(d)).c_str());
      return;
    }
    if (!an_from || !an_to || !an_step) {
      throw CLI::ValidationError("analytic", "give either --delta or a full --sweep-from/"
                                 "--sweep-to/--sweep-step range");
    }
    if (!(*an_step > 0.0)) throw CLI::ValidationError("analytic", "--sweep-step must be > 0");
    std::string csv = "delta_rad,dimension\n";
    // march in exact multiples of the step to keep endpoints reproducible
    for (long k = 0;; ++k) {
      const double angle = *an_from + static_cast<double>(k) * *an_step;
      if (angle > *an_to + 1e-12) break;
      const double rad = global.to_radians(angle);
      csv += format_full(rad);
      csv += ',';
      csv += format_full(single_sector_dimension(rad));
      csv += '\n';
    }
    emit(csv, an_out);
  });

  // optimize
  auto* opt = app.add_subcommand("optimize", "maximize D over 2N-sector alternating plates");
  OptimizeOptions opt_options;
  int opt_n = 1;
  bool opt_sweep = false, opt_no_refine = false;
  std::string opt_out, opt_sweep_out;
  opt->add_option("-n,--mesas", opt_n, "number of pi-phase mesas N")->required();
  opt->add_option("--budget", opt_options.budget, "random candidates (default 2000)");
  opt->add_option("--seed", opt_options.seed, "random seed (default 1)");
  opt->add_option("--restarts", opt_options.restarts, "independent restarts (default 4)");
  opt->add_option("--threads", opt_options.threads,
                  "worker threads (default: all cores; result is thread-independent)");
  opt->add_flag("--no-refine", opt_no_refine, "random search only, skip pattern refinement");
  opt->add_flag("--sweep", opt_sweep, "optimize every N in [1, n] and emit n,dimension_max");
  opt->add_option("--out", opt_out, "report JSON path");
  opt->add_option("--sweep-out", opt_sweep_out, "sweep CSV path");
  opt->callback([&] {
    opt_options.refine = !opt_no_refine;
    if (opt_sweep) {
      const auto reports =
          dimension_vs_sectors(opt_n, opt_options.budget, opt_options.seed, opt_options);
      for (const auto& r : reports) {
        std::printf("N = %d  D = %s\n", r.n_mesas, format_fixed(r.best_dimension).c_str());
      }
      if (!opt_sweep_out.empty()) write_sweep_csv(reports, opt_sweep_out);
      if (!opt_out.empty()) write_report_json(reports.back(), opt_out);
      return;
    }
    const OptimizationReport report = optimize_plate(opt_n, opt_options);
    std::printf("N = %d\n", report.n_mesas);
    std::printf("D = %s\n", format_fixed(report.best_dimension).c_str());
    std::printf("evaluations = %ld\n", report.evaluations);
    std::printf("l_max = %lld\n", static_cast<long long>(report.l_max_used));
    for (std::size_t k = 0; k < report.best_plate.boundaries().size(); ++k) {
      std::printf("boundary[%zu] = %s\n", k,
                  format_fixed(report.best_plate.boundaries()[k]).c_str());
    }
    if (!opt_out.empty()) write_report_json(report, opt_out);
  });

  // schmidt
  auto* sch = app.add_subcommand("schmidt", "Schmidt number of a source weight file");
  std::string sch_weights;
  sch->add_option("weights", sch_weights, "text file with nonnegative weights")->required();
  sch->callback([&] {
    const SourceSpectrum source = SourceSpectrum::from_weights(read_weights(sch_weights));
    std::printf("K = %s\n", format_fixed(schmidt_number(source)).c_str());
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
