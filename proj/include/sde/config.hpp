#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sde/path.hpp"
#include "sde/problem.hpp"

namespace sde {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { simulate, figure1, figure2, converge, moments };

const char* to_string(Command command);
Command command_from_string(const std::string& name);

// Resolved experiment description. Defaults: theta=0, c=1, q=3, sigma=1
// (the built-in cubic-drift problem), x0=1, T=1, n=1000, M=1000, p=2,
// master_seed=12345, path_index=0, scheme=semidiscrete, all three schemes
// listed for trajectory dumps. Seeds are never taken from the clock.
struct ExperimentSpec {
  double theta = 0.0;
  double c = 1.0;
  int q = 3;
  double sigma = 1.0;
  double x0 = 1.0;
  double horizon = 1.0;                      // key: T
  std::int64_t steps = 1000;                 // key: n
  std::int64_t fine_steps = 0;               // key: fine_n (converge only)
  std::vector<std::int64_t> levels;          // coarse step counts (converge)
  std::int64_t paths = 1000;                 // key: M
  double p = 2.0;
  std::uint64_t master_seed = 12345;
  std::int64_t path_index = 0;
  SchemeKind scheme = SchemeKind::semidiscrete;  // converge / moments
  std::vector<SchemeKind> schemes = {
      SchemeKind::euler, SchemeKind::tamed, SchemeKind::semidiscrete};
  std::string out;     // output directory; CLI flag --out overrides
  int workers = 1;     // execution detail, not part of output headers

  SdeProblem problem() const;
};

// Parses a flat key = value document ('#' comments, blank lines allowed;
// `levels` and `schemes` are comma-separated lists). Unknown keys and
// constraint violations raise ConfigError naming the offender.
ExperimentSpec parse_config(const std::string& text);

// parse_config followed by --key=value overrides, then validation.
ExperimentSpec resolve_spec(
    const std::string& config_text,
    const std::vector<std::pair<std::string, std::string>>& overrides);

// Constraints that depend on the subcommand (converge divisibility,
// positivity x0 > 0, ...). Throws ConfigError naming the constraint.
void validate_for(const ExperimentSpec& spec, Command command);

}  // namespace sde
