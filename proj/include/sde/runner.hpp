#pragma once

#include <string>

#include "sde/config.hpp"

namespace sde {

// Formats with 17 significant digits, enough to round-trip a double.
std::string fmt17(double x);

// Executes one subcommand and writes its CSV artifact into spec.out:
//   simulate -> trajectories.csv   (t, path_id, scheme, value, finite_flag)
//   figure1  -> diff.csv           (t, z)
//   figure2  -> positivity.csv     (scheme, M, count_nonpositive, fraction,
//                                   first_crossing_min/median/max)
//   converge -> convergence.csv    (delta, estimate, std, M, ci_halfwidth)
//   moments  -> moments.csv        (p, estimate, std, M, gronwall_bound)
// Every file starts with '#' comment lines embedding the resolved spec.
// Output is byte-identical for a fixed spec, whatever the worker count.
// Returns the path of the written file. Throws ConfigError for invalid
// specs and std::runtime_error for I/O failures.
std::string run(const ExperimentSpec& spec, Command command);

}  // namespace sde
