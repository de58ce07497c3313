#include "sde/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sde/analysis.hpp"
#include "sde/parallel.hpp"
#include "sde/rng.hpp"

namespace sde {

namespace {

std::string fmt_int(std::int64_t x) { return std::to_string(x); }

std::string join_levels(const std::vector<std::int64_t>& levels) {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels[i]);
  }
  return out;
}

std::string join_schemes(const std::vector<SchemeKind>& schemes) {
  std::string out;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    if (i) out += ',';
    out += to_string(schemes[i]);
  }
  return out;
}

// The resolved experiment parameters, one comment line per key. Execution
// details (out, workers) are omitted: they do not affect the measurements
// and the file must be byte-identical across worker counts.
void write_header(std::ostream& os, const ExperimentSpec& spec,
                  Command command) {
  os << "# command = " << to_string(command) << "\n";
  os << "# theta = " << fmt17(spec.theta) << "\n";
  os << "# c = " << fmt17(spec.c) << "\n";
  os << "# q = " << spec.q << "\n";
  os << "# sigma = " << fmt17(spec.sigma) << "\n";
  os << "# x0 = " << fmt17(spec.x0) << "\n";
  os << "# T = " << fmt17(spec.horizon) << "\n";
  os << "# n = " << fmt_int(spec.steps) << "\n";
  os << "# fine_n = " << fmt_int(spec.fine_steps) << "\n";
  os << "# levels = " << join_levels(spec.levels) << "\n";
  os << "# M = " << fmt_int(spec.paths) << "\n";
  os << "# p = " << fmt17(spec.p) << "\n";
  os << "# master_seed = " << std::to_string(spec.master_seed) << "\n";
  os << "# path_index = " << fmt_int(spec.path_index) << "\n";
  os << "# scheme = " << to_string(spec.scheme) << "\n";
  os << "# schemes = " << join_schemes(spec.schemes) << "\n";
}

void write_simulate(std::ostream& os, const ExperimentSpec& spec) {
  const SdeProblem problem = spec.problem();
  const TimeGrid grid = make_grid(spec.horizon, spec.steps);
  os << "t,path_id,scheme,value,finite_flag\n";
  for (SchemeKind scheme : spec.schemes) {
    std::vector<SchemePath> paths(static_cast<std::size_t>(spec.paths));
    parallel_for(spec.paths, spec.workers, [&](std::int64_t i) {
      const BrownianIncrements incs = sample_increments(
          grid, derive_stream(spec.master_seed, static_cast<std::uint64_t>(i)));
      paths[static_cast<std::size_t>(i)] =
          integrate_scheme(problem, scheme, incs);
    });
    for (std::int64_t i = 0; i < spec.paths; ++i) {
      const SchemePath& path = paths[static_cast<std::size_t>(i)];
      for (std::int64_t k = 0; k <= grid.steps; ++k) {
        const double v = path.values[static_cast<std::size_t>(k)];
        os << fmt17(grid.node(k)) << ',' << i << ',' << to_string(scheme)
           << ',' << fmt17(v) << ',' << (std::isfinite(v) ? 1 : 0) << "\n";
      }
    }
  }
}

void write_figure1(std::ostream& os, const ExperimentSpec& spec) {
  const SdeProblem problem = spec.problem();
  const TimeGrid grid = make_grid(spec.horizon, spec.steps);
  const BrownianIncrements incs = sample_increments(
      grid, derive_stream(spec.master_seed,
                          static_cast<std::uint64_t>(spec.path_index)));
  const auto series = diff_trajectory(problem, incs);
  os << "t,z\n";
  for (const auto& [t, z] : series) {
    os << fmt17(t) << ',' << fmt17(z) << "\n";
  }
}

void write_positivity_row(std::ostream& os, const char* scheme,
                          const PositivityReport& report) {
  os << scheme << ',' << report.sample_count << ','
     << report.count_nonpositive << ',' << fmt17(report.fraction) << ','
     << report.first_crossing_min << ',' << report.first_crossing_median
     << ',' << report.first_crossing_max << "\n";
}

void write_figure2(std::ostream& os, const ExperimentSpec& spec) {
  const SdeProblem problem = spec.problem();
  const TimeGrid grid = make_grid(spec.horizon, spec.steps);
  const Splitting splitting = geometric_splitting(problem);
  std::vector<std::int64_t> tamed_crossings(
      static_cast<std::size_t>(spec.paths));
  std::vector<std::int64_t> semi_crossings(
      static_cast<std::size_t>(spec.paths));
  // Both schemes see the same increments path by path.
  parallel_for(spec.paths, spec.workers, [&](std::int64_t i) {
    const BrownianIncrements incs = sample_increments(
        grid, derive_stream(spec.master_seed, static_cast<std::uint64_t>(i)));
    tamed_crossings[static_cast<std::size_t>(i)] =
        first_nonpositive_index(tamed_euler_path(problem, incs));
    semi_crossings[static_cast<std::size_t>(i)] =
        first_nonpositive_index(semidiscrete_path(problem, splitting, incs));
  });
  os << "scheme,M,count_nonpositive,fraction,first_crossing_min,"
        "first_crossing_median,first_crossing_max\n";
  write_positivity_row(os, "tamed", aggregate_positivity(tamed_crossings));
  write_positivity_row(os, "semidiscrete",
                       aggregate_positivity(semi_crossings));
}

void write_converge(std::ostream& os, const ExperimentSpec& spec) {
  const SdeProblem problem = spec.problem();
  const Splitting splitting = geometric_splitting(problem);
  const auto reports = strong_error_study(
      problem, splitting, spec.levels, spec.fine_steps, spec.paths,
      spec.master_seed, spec.scheme, spec.workers);
  os << "delta,estimate,std,M,ci_halfwidth\n";
  for (const StrongErrorReport& r : reports) {
    os << fmt17(r.delta) << ',' << fmt17(r.estimate) << ','
       << fmt17(r.sample_std) << ',' << r.sample_count << ','
       << fmt17(r.ci_halfwidth) << "\n";
  }
  try {
    const auto [slope, r_squared] = order_fit(reports);
    os << "# order_fit slope = " << fmt17(slope)
       << " r_squared = " << fmt17(r_squared) << "\n";
  } catch (const std::invalid_argument& e) {
    os << "# order_fit unavailable: " << e.what() << "\n";
  }
}

void write_moments(std::ostream& os, const ExperimentSpec& spec) {
  const SdeProblem problem = spec.problem();
  const MomentReport report =
      moment_study_run(problem, spec.scheme, spec.steps, spec.paths,
                       spec.master_seed, spec.p, spec.workers);
  os << "p,estimate,std,M,gronwall_bound\n";
  os << fmt17(report.p) << ',' << fmt17(report.sup_estimate) << ','
     << fmt17(report.sup_std) << ',' << report.sample_count << ','
     << (report.gronwall_bound ? fmt17(*report.gronwall_bound) : "nan")
     << "\n";
}

}  // namespace

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string run(const ExperimentSpec& spec, Command command) {
  validate_for(spec, command);
  if (spec.out.empty()) {
    throw ConfigError("missing output directory (set --out or key 'out')");
  }
  std::error_code ec;
  std::filesystem::create_directories(spec.out, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + spec.out +
                             "': " + ec.message());
  }
  const char* filename = nullptr;
  switch (command) {
    case Command::simulate:
      filename = "trajectories.csv";
      break;
    case Command::figure1:
      filename = "diff.csv";
      break;
    case Command::figure2:
      filename = "positivity.csv";
      break;
    case Command::converge:
      filename = "convergence.csv";
      break;
    case Command::moments:
      filename = "moments.csv";
      break;
  }
  const std::string path =
      (std::filesystem::path(spec.out) / filename).string();
  std::ostringstream body;
  write_header(body, spec, command);
  switch (command) {
    case Command::simulate:
      write_simulate(body, spec);
      break;
    case Command::figure1:
      write_figure1(body, spec);
      break;
    case Command::figure2:
      write_figure2(body, spec);
      break;
    case Command::converge:
      write_converge(body, spec);
      break;
    case Command::moments:
      write_moments(body, spec);
      break;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  file << body.str();
  file.flush();
  if (!file.good()) {
    throw std::runtime_error("write failed for '" + path + "'");
  }
  return path;
}

}  // namespace sde
