#include "oamdim/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace oamdim {

namespace {

constexpr double kMinGap = 1e-9;  // degenerate boundaries are nudged apart, not rejected

double evaluate(const std::vector<double>& boundaries, const LmaxOptions& options) {
  return windowed_dimension(SectorPlate::alternating(boundaries), options).dimension;
}

// Restore strict increase within [0, 2*pi) after sampling or a refinement move.
void enforce_strict_order(std::vector<double>& b) {
  std::sort(b.begin(), b.end());
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (b[k] <= b[k - 1]) b[k] = b[k - 1] + kMinGap;
  }
  if (b.back() >= kTwoPi) {
    double top = kTwoPi;
    for (std::size_t k = b.size(); k-- > 0;) {
      top -= kMinGap;
      if (b[k] <= top) break;
      b[k] = top;
    }
  }
}

struct RestartResult {
  std::vector<double> boundaries;
  double dimension = -1.0;         // search-accuracy value
  double random_best = -1.0;
  long evaluations = 0;
  long passes = 0;
  std::vector<double> trace;
};

class RestartRun {
 public:
  RestartRun(int n_mesas, const OptimizeOptions& options, bool trace_enabled)
      : n_(n_mesas), options_(options), trace_enabled_(trace_enabled) {}

  RestartResult run(int restart_index, long draws, const std::vector<double>* warm_start) {
    std::seed_seq seq{static_cast<std::uint64_t>(n_), options_.seed,
                      static_cast<std::uint64_t>(restart_index)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> uniform(0.0, kTwoPi);

    RestartResult result;
    if (warm_start != nullptr) consider(result, *warm_start);
    for (long d = 0; d < draws; ++d) {
      std::vector<double> candidate(2 * static_cast<std::size_t>(n_));
      for (double& b : candidate) b = uniform(rng);
      enforce_strict_order(candidate);
      consider(result, candidate);
    }
    if (result.dimension < 0.0) return result;  // no candidates assigned to this restart
    result.random_best = result.dimension;

    if (options_.refine) refine(result);
    return result;
  }

 private:
  void consider(RestartResult& r, const std::vector<double>& candidate) {
    const double d = evaluate(candidate, options_.search_lmax);
    ++r.evaluations;
    if (d > r.dimension) {
      r.dimension = d;
      r.boundaries = candidate;
    }
    if (trace_enabled_) r.trace.push_back(r.dimension);
  }

  void refine(RestartResult& r) {
    const double initial =
        options_.initial_step > 0.0 ? options_.initial_step : kPi / (8.0 * static_cast<double>(n_));
    double step = initial;
    while (step >= options_.min_step) {
      ++r.passes;
      bool improved = false;
      for (std::size_t k = 0; k < r.boundaries.size(); ++k) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> candidate = r.boundaries;
          candidate[k] = wrap_two_pi(candidate[k] + sign * step);
          enforce_strict_order(candidate);
          const double d = evaluate(candidate, options_.search_lmax);
          ++r.evaluations;
          if (d > r.dimension) {
            r.dimension = d;
            r.boundaries = std::move(candidate);
            improved = true;
          }
          if (trace_enabled_) r.trace.push_back(r.dimension);
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  int n_;
  const OptimizeOptions& options_;
  bool trace_enabled_;
};

OptimizationReport optimize_impl(int n_mesas, const OptimizeOptions& options,
                                 const std::vector<double>* warm_start) {
  if (n_mesas < 1) throw std::invalid_argument("optimize_plate: n_mesas must be >= 1");
  if (options.budget < 1) throw std::invalid_argument("optimize_plate: budget must be >= 1");
  if (options.restarts < 1) throw std::invalid_argument("optimize_plate: restarts must be >= 1");

  const int restarts = static_cast<int>(std::min<long>(options.restarts, options.budget));
  const bool trace_enabled = options.record_trace && restarts == 1;
  std::vector<RestartResult> results(static_cast<std::size_t>(restarts));

  auto run_one = [&](int r) {
    const long draws = options.budget / restarts + (r < options.budget % restarts ? 1 : 0);
    RestartRun runner(n_mesas, options, trace_enabled);
    // The warm start joins the first restart's pool.
    results[static_cast<std::size_t>(r)] = runner.run(r, draws, r == 0 ? warm_start : nullptr);
  };

  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(restarts)));
  if (workers <= 1) {
    for (int r = 0; r < restarts; ++r) run_one(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1)) run_one(r);
      });
    }
    for (auto& t : pool) t.join();
  }

  int winner = -1;
  for (int r = 0; r < restarts; ++r) {
    const auto& res = results[static_cast<std::size_t>(r)];
    if (res.dimension < 0.0) continue;
    if (winner < 0 || res.dimension > results[static_cast<std::size_t>(winner)].dimension) {
      winner = r;
    }
  }
  if (winner < 0) throw std::logic_error("optimize_plate: no candidate was evaluated");

  const auto& best = results[static_cast<std::size_t>(winner)];
  OptimizationReport report;
  report.n_mesas = n_mesas;
  report.seed = options.seed;
  report.best_plate = SectorPlate::alternating(best.boundaries);
  const AnalyzerDimension final = windowed_dimension(report.best_plate, options.final_lmax);
  report.best_dimension = final.dimension;
  report.l_max_used = final.l_max;
  report.random_best_dimension = best.random_best;
  report.refinement_iterations = best.passes;
  for (const auto& res : results) report.evaluations += res.evaluations;
  report.trace = best.trace;
  return report;
}

}  // namespace

double evaluate_candidate(const std::vector<double>& boundaries_rad, const LmaxOptions& options) {
  if (boundaries_rad.empty() || boundaries_rad.size() % 2 != 0) {
    throw std::invalid_argument("evaluate_candidate: boundary count must be even and positive");
  }
  return evaluate(boundaries_rad, options);
}

OptimizationReport optimize_plate(int n_mesas, const OptimizeOptions& options) {
  return optimize_impl(n_mesas, options, nullptr);
}

OptimizationReport optimize_plate(int n_mesas, long budget, std::uint64_t seed) {
  OptimizeOptions options;
  options.budget = budget;
  options.seed = seed;
  return optimize_impl(n_mesas, options, nullptr);
}

std::vector<OptimizationReport> dimension_vs_sectors(int n_max, long budget_per_n,
                                                     std::uint64_t seed,
                                                     const OptimizeOptions& base) {
  if (n_max < 1) throw std::invalid_argument("dimension_vs_sectors: n_max must be >= 1");
  std::vector<OptimizationReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max));
  std::vector<double> warm;
  for (int n = 1; n <= n_max; ++n) {
    OptimizeOptions options = base;
    options.budget = budget_per_n;
    options.seed = seed;
    const std::vector<double>* warm_ptr = warm.empty() ? nullptr : &warm;
    reports.push_back(optimize_impl(n, options, warm_ptr));

    // Lift the optimum into the next space: add a zero-width mesa in the
    // middle of the widest sector. The alternating phase pattern re-aligns
    // so the plate (and its dimension) is unchanged up to the tiny mesa.
    warm = reports.back().best_plate.boundaries();
    if (static_cast<int>(warm.size()) != 2 * n) {
      warm.clear();  // canonical merge collapsed sectors; skip the warm start
      continue;
    }
    std::size_t widest = 0;
    double widest_width = -1.0;
    for (std::size_t k = 0; k < warm.size(); ++k) {
      const double next = (k + 1 < warm.size()) ? warm[k + 1] : warm[0] + kTwoPi;
      if (next - warm[k] > widest_width) {
        widest_width = next - warm[k];
        widest = k;
      }
    }
    const double next = (widest + 1 < warm.size()) ? warm[widest + 1] : warm[0] + kTwoPi;
    const double g = wrap_two_pi(0.5 * (warm[widest] + next));
    warm.push_back(g);
    warm.push_back(g + kMinGap);
    enforce_strict_order(warm);
  }
  return reports;
}

}  // namespace oamdim
