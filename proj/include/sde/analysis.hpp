#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sde/path.hpp"
#include "sde/problem.hpp"
#include "sde/schemes.hpp"

namespace sde {

// Mean, sample standard deviation (n-1 denominator, 0 when n < 2) and
// normal-approximation 95% half-width 1.96*std/sqrt(n). Accumulation is in
// ascending index order, so results are bitwise reproducible.
struct SampleStats {
  double mean = 0.0;
  double sample_std = 0.0;
  double ci_halfwidth = 0.0;
  std::int64_t count = 0;
};

SampleStats summarize(std::span<const double> values);

// One refinement level of a strong (mean-square, uniform-in-time) error
// study: estimate = mean over paths of sup_k |y_k - ref_k|^2.
struct StrongErrorReport {
  double delta = 0.0;
  double estimate = 0.0;
  double sample_std = 0.0;
  std::int64_t sample_count = 0;
  double ci_halfwidth = 0.0;
};

struct MomentReport {
  double p = 2.0;
  double sup_estimate = 0.0;  // mean of sup_k |y_k|^p
  double sup_std = 0.0;
  double terminal_estimate = 0.0;  // mean of |y_n|^p
  double terminal_std = 0.0;
  std::int64_t sample_count = 0;
  // |x0|^p * exp(sigma^2 p (p-1) T / 2); bounds the terminal moment for the
  // built-in family. Unset for problems without family parameters.
  std::optional<double> gronwall_bound;
};

struct PositivityReport {
  std::int64_t sample_count = 0;
  std::int64_t count_nonpositive = 0;  // paths with some node value <= 0
  double fraction = 0.0;
  // Distribution of the first node index with value <= 0 over offending
  // paths; -1 when no path offends. median is the lower median.
  std::int64_t first_crossing_min = -1;
  std::int64_t first_crossing_median = -1;
  std::int64_t first_crossing_max = -1;
};

// max over common nodes of (a_k - b_k)^2. The grids must share the horizon
// and one step count must divide the other; comparison happens at the
// coarser grid's nodes. Non-finite differences count as +infinity.
// Throws std::invalid_argument for incompatible grids.
double sup_sq_distance(const SchemePath& a, const SchemePath& b);

// First node index with value <= 0, or -1 if none.
std::int64_t first_nonpositive_index(const SchemePath& path);

// Coupled strong-error study. Per path: sample increments at fine_n,
// integrate the semi-discrete reference there, coarsen to every coarse
// level, integrate `scheme` on the coarse increments of the same Brownian
// path and record sup_sq_distance against the reference. Reports are sorted
// by decreasing delta. Every coarse n must divide fine_n.
std::vector<StrongErrorReport> strong_error_study(
    const SdeProblem& problem, const Splitting& splitting,
    std::span<const std::int64_t> coarse_steps, std::int64_t fine_steps,
    std::int64_t paths, std::uint64_t master_seed,
    SchemeKind scheme = SchemeKind::semidiscrete, int workers = 1);

// Sample statistics of sup_k |y_k|^p and |y_n|^p over the given paths.
// Requires p >= 2 and at least one path.
MomentReport moment_study(std::span<const SchemePath> paths, double p);
MomentReport moment_study(std::span<const SchemePath> paths, double p,
                          const SdeProblem& problem);

PositivityReport positivity_study(std::span<const SchemePath> paths);
PositivityReport aggregate_positivity(
    std::span<const std::int64_t> first_crossing);  // -1 per clean path

// Pathwise difference tamed-Euler minus semi-discrete (geometric splitting)
// on shared increments: series of (t_k, z_k).
std::vector<std::pair<double, double>> diff_trajectory(
    const SdeProblem& problem, const BrownianIncrements& incs);

// Convenience form: overrides the family's sigma with `sigma`, samples the
// increments for (master_seed, path_index) on a fresh n-step grid.
std::vector<std::pair<double, double>> diff_trajectory(
    const SdeProblem& problem, std::int64_t steps, double sigma,
    std::uint64_t master_seed, std::uint64_t path_index);

// Least-squares slope and r^2 of log(estimate) against log(delta). Requires
// at least 3 levels, all with positive finite estimates.
std::pair<double, double> order_fit(
    std::span<const StrongErrorReport> reports);

// Streaming runners used by the CLI; aggregation order is ascending path
// index for any worker count, so reports match the span-based forms bit for
// bit.
MomentReport moment_study_run(const SdeProblem& problem, SchemeKind scheme,
                              std::int64_t steps, std::int64_t paths,
                              std::uint64_t master_seed, double p,
                              int workers = 1);
PositivityReport positivity_study_run(const SdeProblem& problem,
                                      SchemeKind scheme, std::int64_t steps,
                                      std::int64_t paths,
                                      std::uint64_t master_seed,
                                      int workers = 1);

// Integrates one path of the given scheme. SchemeKind::semidiscrete uses
// the geometric splitting, so it requires a family problem.
SchemePath integrate_scheme(const SdeProblem& problem, SchemeKind scheme,
                            const BrownianIncrements& incs);

}  // namespace sde
