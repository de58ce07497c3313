#include "sde/schemes.hpp"

#include <string>

namespace sde {

namespace {

SchemePath make_path(const SdeProblem& problem, const BrownianIncrements& incs,
                     SchemeKind label) {
  if (incs.grid.horizon != problem.horizon) {
    throw std::invalid_argument(
        "scheme path: increments horizon " + std::to_string(incs.grid.horizon) +
        " does not match problem horizon " + std::to_string(problem.horizon));
  }
  SchemePath path;
  path.grid = incs.grid;
  path.values.resize(incs.grid.steps + 1);
  path.values[0] = problem.x0;
  path.scheme_label = label;
  path.path_index = static_cast<std::int64_t>(incs.path_index);
  path.stream_seed = incs.master_seed;
  return path;
}

}  // namespace

SchemePath euler_path(const SdeProblem& problem,
                      const BrownianIncrements& incs) {
  SchemePath path = make_path(problem, incs, SchemeKind::euler);
  const double delta = incs.grid.delta;
  for (std::int64_t k = 0; k < incs.grid.steps; ++k) {
    const double y = path.values[k];
    path.values[k + 1] = constant_coefficient_step(
        y, problem.drift(y), problem.diffusion(y), delta, incs.dw[k]);
  }
  return path;
}

SchemePath tamed_euler_path(const SdeProblem& problem,
                            const BrownianIncrements& incs) {
  SchemePath path = make_path(problem, incs, SchemeKind::tamed);
  const double delta = incs.grid.delta;
  for (std::int64_t k = 0; k < incs.grid.steps; ++k) {
    const double y = path.values[k];
    const double drift = problem.drift(y);
    path.values[k + 1] = y + delta * drift / (1.0 + delta * std::abs(drift)) +
                         problem.diffusion(y) * incs.dw[k];
  }
  return path;
}

SchemePath semidiscrete_path(const SdeProblem& problem,
                             const Splitting& splitting,
                             const BrownianIncrements& incs) {
  if (!splitting.alpha || !splitting.beta) {
    throw ConfigurationError(
        "semidiscrete_path: splitting lacks frozen-coefficient closed forms");
  }
  SchemePath path = make_path(problem, incs, SchemeKind::semidiscrete);
  const double delta = incs.grid.delta;
  switch (splitting.solver) {
    case StepSolverKind::constant_coefficient:
      for (std::int64_t k = 0; k < incs.grid.steps; ++k) {
        const double y = path.values[k];
        path.values[k + 1] = constant_coefficient_step(
            y, splitting.alpha(y), splitting.beta(y), delta, incs.dw[k]);
      }
      break;
    case StepSolverKind::geometric_linear:
      for (std::int64_t k = 0; k < incs.grid.steps; ++k) {
        const double y = path.values[k];
        path.values[k + 1] = geometric_exact_step(
            y, splitting.alpha(y), splitting.beta(y), delta, incs.dw[k]);
      }
      break;
    default:
      throw ConfigurationError("semidiscrete_path: unknown step solver kind");
  }
  return path;
}

}  // namespace sde
