#include "sde/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sde/parallel.hpp"
#include "sde/rng.hpp"

namespace sde {

namespace {

// Per-path reductions shared by the span-based studies and the streaming
// runners, so both produce identical numbers.
struct MomentReduction {
  double sup_pow;
  double terminal_pow;
};

MomentReduction reduce_moments(const SchemePath& path, double p) {
  double sup_abs = 0.0;
  for (double v : path.values) {
    const double a = std::abs(v);
    if (a > sup_abs) sup_abs = a;
  }
  return {std::pow(sup_abs, p),
          std::pow(std::abs(path.values.back()), p)};
}

MomentReport assemble_moment_report(const std::vector<double>& sup_pows,
                                    const std::vector<double>& terminal_pows,
                                    double p) {
  const SampleStats sup_stats = summarize(sup_pows);
  const SampleStats terminal_stats = summarize(terminal_pows);
  MomentReport report;
  report.p = p;
  report.sup_estimate = sup_stats.mean;
  report.sup_std = sup_stats.sample_std;
  report.terminal_estimate = terminal_stats.mean;
  report.terminal_std = terminal_stats.sample_std;
  report.sample_count = sup_stats.count;
  return report;
}

double gronwall_terminal_bound(const SdeProblem& problem, double p) {
  const double sigma = problem.family->sigma;
  return std::pow(std::abs(problem.x0), p) *
         std::exp(sigma * sigma * p * (p - 1.0) * problem.horizon / 2.0);
}

void require_p(double p) {
  if (!(p >= 2.0)) {
    throw std::invalid_argument("moment_study: p must be >= 2, got " +
                                std::to_string(p));
  }
}

}  // namespace

SampleStats summarize(std::span<const double> values) {
  SampleStats stats;
  stats.count = static_cast<std::int64_t>(values.size());
  if (stats.count == 0) return stats;
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(stats.count);
  if (stats.count > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - stats.mean;
      ss += d * d;
    }
    stats.sample_std = std::sqrt(ss / static_cast<double>(stats.count - 1));
  }
  stats.ci_halfwidth =
      1.96 * stats.sample_std / std::sqrt(static_cast<double>(stats.count));
  return stats;
}

double sup_sq_distance(const SchemePath& a, const SchemePath& b) {
  if (a.grid.horizon != b.grid.horizon) {
    throw std::invalid_argument(
        "sup_sq_distance: paths live on different horizons");
  }
  const SchemePath* coarse = &a;
  const SchemePath* fine = &b;
  if (coarse->grid.steps > fine->grid.steps) std::swap(coarse, fine);
  if (fine->grid.steps % coarse->grid.steps != 0) {
    throw std::invalid_argument(
        "sup_sq_distance: neither grid refines the other (" +
        std::to_string(a.grid.steps) + " vs " + std::to_string(b.grid.steps) +
        " steps)");
  }
  const std::int64_t stride = fine->grid.steps / coarse->grid.steps;
  double worst = 0.0;
  for (std::int64_t k = 0; k <= coarse->grid.steps; ++k) {
    const double d = coarse->values[k] - fine->values[k * stride];
    const double d2 = d * d;
    if (!std::isfinite(d2)) return std::numeric_limits<double>::infinity();
    if (d2 > worst) worst = d2;
  }
  return worst;
}

std::int64_t first_nonpositive_index(const SchemePath& path) {
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(path.values.size());
       ++k) {
    if (path.values[k] <= 0.0) return k;
  }
  return -1;
}

SchemePath integrate_scheme(const SdeProblem& problem, SchemeKind scheme,
                            const BrownianIncrements& incs) {
  switch (scheme) {
    case SchemeKind::euler:
      return euler_path(problem, incs);
    case SchemeKind::tamed:
      return tamed_euler_path(problem, incs);
    case SchemeKind::semidiscrete:
      return semidiscrete_path(problem, geometric_splitting(problem), incs);
  }
  throw std::invalid_argument("integrate_scheme: unknown scheme kind");
}

std::vector<StrongErrorReport> strong_error_study(
    const SdeProblem& problem, const Splitting& splitting,
    std::span<const std::int64_t> coarse_steps, std::int64_t fine_steps,
    std::int64_t paths, std::uint64_t master_seed, SchemeKind scheme,
    int workers) {
  if (coarse_steps.empty()) {
    throw std::invalid_argument("strong_error_study: no coarse levels");
  }
  if (paths < 1) {
    throw std::invalid_argument("strong_error_study: need at least one path");
  }
  std::vector<std::int64_t> levels(coarse_steps.begin(), coarse_steps.end());
  std::sort(levels.begin(), levels.end());  // decreasing delta
  for (std::int64_t n : levels) {
    if (n < 1 || fine_steps % n != 0) {
      throw std::invalid_argument("strong_error_study: coarse level " +
                                  std::to_string(n) + " does not divide " +
                                  std::to_string(fine_steps));
    }
  }
  const TimeGrid fine_grid = make_grid(problem.horizon, fine_steps);
  std::vector<std::vector<double>> errors(
      levels.size(), std::vector<double>(static_cast<std::size_t>(paths)));
  parallel_for(paths, workers, [&](std::int64_t i) {
    const BrownianIncrements fine_incs = sample_increments(
        fine_grid, derive_stream(master_seed, static_cast<std::uint64_t>(i)));
    const SchemePath reference =
        semidiscrete_path(problem, splitting, fine_incs);
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const BrownianIncrements coarse_incs =
          coarsen(fine_incs, fine_steps / levels[l]);
      const SchemePath trial =
          scheme == SchemeKind::semidiscrete
              ? semidiscrete_path(problem, splitting, coarse_incs)
              : integrate_scheme(problem, scheme, coarse_incs);
      errors[l][static_cast<std::size_t>(i)] =
          sup_sq_distance(trial, reference);
    }
  });
  std::vector<StrongErrorReport> reports(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const SampleStats stats = summarize(errors[l]);
    reports[l].delta = make_grid(problem.horizon, levels[l]).delta;
    reports[l].estimate = stats.mean;
    reports[l].sample_std = stats.sample_std;
    reports[l].sample_count = stats.count;
    reports[l].ci_halfwidth = stats.ci_halfwidth;
  }
  return reports;
}

MomentReport moment_study(std::span<const SchemePath> paths, double p) {
  require_p(p);
  if (paths.empty()) {
    throw std::invalid_argument("moment_study: no paths");
  }
  std::vector<double> sup_pows(paths.size());
  std::vector<double> terminal_pows(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const MomentReduction r = reduce_moments(paths[i], p);
    sup_pows[i] = r.sup_pow;
    terminal_pows[i] = r.terminal_pow;
  }
  return assemble_moment_report(sup_pows, terminal_pows, p);
}

MomentReport moment_study(std::span<const SchemePath> paths, double p,
                          const SdeProblem& problem) {
  MomentReport report = moment_study(paths, p);
  if (problem.has_family()) {
    report.gronwall_bound = gronwall_terminal_bound(problem, p);
  }
  return report;
}

PositivityReport aggregate_positivity(
    std::span<const std::int64_t> first_crossing) {
  PositivityReport report;
  report.sample_count = static_cast<std::int64_t>(first_crossing.size());
  std::vector<std::int64_t> offenders;
  for (std::int64_t idx : first_crossing) {
    if (idx >= 0) offenders.push_back(idx);
  }
  report.count_nonpositive = static_cast<std::int64_t>(offenders.size());
  report.fraction =
      report.sample_count == 0
          ? 0.0
          : static_cast<double>(report.count_nonpositive) /
                static_cast<double>(report.sample_count);
  if (!offenders.empty()) {
    std::sort(offenders.begin(), offenders.end());
    report.first_crossing_min = offenders.front();
    report.first_crossing_median = offenders[(offenders.size() - 1) / 2];
    report.first_crossing_max = offenders.back();
  }
  return report;
}

PositivityReport positivity_study(std::span<const SchemePath> paths) {
  std::vector<std::int64_t> crossings(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    crossings[i] = first_nonpositive_index(paths[i]);
  }
  return aggregate_positivity(crossings);
}

std::vector<std::pair<double, double>> diff_trajectory(
    const SdeProblem& problem, const BrownianIncrements& incs) {
  const SchemePath tamed = tamed_euler_path(problem, incs);
  const SchemePath semi =
      semidiscrete_path(problem, geometric_splitting(problem), incs);
  std::vector<std::pair<double, double>> series(tamed.values.size());
  for (std::size_t k = 0; k < tamed.values.size(); ++k) {
    series[k] = {tamed.grid.node(static_cast<std::int64_t>(k)),
                 tamed.values[k] - semi.values[k]};
  }
  return series;
}

std::vector<std::pair<double, double>> diff_trajectory(
    const SdeProblem& problem, std::int64_t steps, double sigma,
    std::uint64_t master_seed, std::uint64_t path_index) {
  if (!problem.has_family()) {
    throw UnsupportedProblemError(
        "diff_trajectory: sigma override requires a family problem");
  }
  const PowerLinearParams f = *problem.family;
  const SdeProblem overridden = power_linear_problem(
      f.theta, f.c, f.q, sigma, problem.x0, problem.horizon);
  const TimeGrid grid = make_grid(problem.horizon, steps);
  const BrownianIncrements incs =
      sample_increments(grid, derive_stream(master_seed, path_index));
  return diff_trajectory(overridden, incs);
}

std::pair<double, double> order_fit(
    std::span<const StrongErrorReport> reports) {
  if (reports.size() < 3) {
    throw std::invalid_argument(
        "order_fit: need at least 3 levels, got " +
        std::to_string(reports.size()));
  }
  std::vector<double> xs(reports.size());
  std::vector<double> ys(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!(reports[i].estimate > 0.0) || !std::isfinite(reports[i].estimate)) {
      throw std::invalid_argument(
          "order_fit: estimates must be positive and finite");
    }
    xs[i] = std::log(reports[i].delta);
    ys[i] = std::log(reports[i].estimate);
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("order_fit: all levels share one delta");
  }
  const double slope = sxy / sxx;
  double r_squared = 1.0;
  if (syy > 0.0) {
    double ss_res = 0.0;
    const double intercept = my - slope * mx;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (intercept + slope * xs[i]);
      ss_res += r * r;
    }
    r_squared = 1.0 - ss_res / syy;
  }
  return {slope, r_squared};
}

MomentReport moment_study_run(const SdeProblem& problem, SchemeKind scheme,
                              std::int64_t steps, std::int64_t paths,
                              std::uint64_t master_seed, double p,
                              int workers) {
  require_p(p);
  if (paths < 1) {
    throw std::invalid_argument("moment_study_run: need at least one path");
  }
  const TimeGrid grid = make_grid(problem.horizon, steps);
  std::vector<double> sup_pows(static_cast<std::size_t>(paths));
  std::vector<double> terminal_pows(static_cast<std::size_t>(paths));
  parallel_for(paths, workers, [&](std::int64_t i) {
    const BrownianIncrements incs = sample_increments(
        grid, derive_stream(master_seed, static_cast<std::uint64_t>(i)));
    const MomentReduction r =
        reduce_moments(integrate_scheme(problem, scheme, incs), p);
    sup_pows[static_cast<std::size_t>(i)] = r.sup_pow;
    terminal_pows[static_cast<std::size_t>(i)] = r.terminal_pow;
  });
  MomentReport report = assemble_moment_report(sup_pows, terminal_pows, p);
  if (problem.has_family()) {
    report.gronwall_bound = gronwall_terminal_bound(problem, p);
  }
  return report;
}

PositivityReport positivity_study_run(const SdeProblem& problem,
                                      SchemeKind scheme, std::int64_t steps,
                                      std::int64_t paths,
                                      std::uint64_t master_seed, int workers) {
  if (paths < 1) {
    throw std::invalid_argument(
        "positivity_study_run: need at least one path");
  }
  const TimeGrid grid = make_grid(problem.horizon, steps);
  std::vector<std::int64_t> crossings(static_cast<std::size_t>(paths));
  parallel_for(paths, workers, [&](std::int64_t i) {
    const BrownianIncrements incs = sample_increments(
        grid, derive_stream(master_seed, static_cast<std::uint64_t>(i)));
    crossings[static_cast<std::size_t>(i)] =
        first_nonpositive_index(integrate_scheme(problem, scheme, incs));
  });
  return aggregate_positivity(crossings);
}

}  // namespace sde
