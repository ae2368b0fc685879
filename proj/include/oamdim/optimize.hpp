#ifndef OAMDIM_OPTIMIZE_HPP
#define OAMDIM_OPTIMIZE_HPP

#include <cstdint>
#include <vector>

#include "oamdim/dimension.hpp"
#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

namespace oamdim {

struct OptimizeOptions {
  std::uint64_t seed = 1;
  long budget = 2000;   // random candidates, split across restarts
  int restarts = 4;
  unsigned threads = 0;  // 0 = one worker per available core; result is thread-count independent
  bool refine = true;    // pattern refinement of each restart's incumbent
  double initial_step = 0.0;  // 0 = pi/(8N)
  double min_step = 1e-6;
  LmaxOptions search_lmax{1e-4, std::int64_t{1} << 23};
  LmaxOptions final_lmax{1e-6, std::int64_t{1} << 23};
  bool record_trace = false;  // incumbent D after every evaluation (restarts == 1 only)
};

struct OptimizationReport {
  int n_mesas = 0;
  SectorPlate best_plate = SectorPlate::uniform();
  double best_dimension = 0.0;  // recomputed at final_lmax accuracy
  long evaluations = 0;         // objective evaluations, random + refinement
  std::uint64_t seed = 0;
  long refinement_iterations = 0;  // pattern-search passes of the winning restart
  std::int64_t l_max_used = 0;     // window of the final recomputation
  double random_best_dimension = 0.0;  // winning restart's incumbent before refinement
  std::vector<double> trace;
};

/// Objective: Shannon dimensionality of the 2N-sector alternating plate with
/// the given strictly increasing boundaries. Pure and deterministic.
double evaluate_candidate(const std::vector<double>& boundaries_rad,
                          const LmaxOptions& options = LmaxOptions{1e-4, std::int64_t{1} << 23});

/// Maximizes Shannon dimensionality over plates with N mesas (2N boundaries,
/// sectors alternatingly phase shifted by pi). Each restart draws its share
/// of `budget` random boundary sets (2N sorted uniform angles), keeps the
/// best, then applies deterministic coordinate-wise pattern refinement with a
/// shrinking step. Restarts use independent seed streams and are merged by
/// (dimension, restart index), so results are identical for any thread count.
OptimizationReport optimize_plate(int n_mesas, const OptimizeOptions& options);
OptimizationReport optimize_plate(int n_mesas, long budget, std::uint64_t seed);

/// One optimization per N in [1, n_max]. Each N past the first also seeds
/// its candidate pool with the previous optimum carrying an extra zero-width
/// mesa, which makes the reported sequence nondecreasing by construction.
std::vector<OptimizationReport> dimension_vs_sectors(int n_max, long budget_per_n,
                                                     std::uint64_t seed,
                                                     const OptimizeOptions& base = {});

}  // namespace oamdim

#endif  // OAMDIM_OPTIMIZE_HPP
