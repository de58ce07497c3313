#include "sde/problem.hpp"

#include <cmath>
#include <string>

namespace sde {

namespace {

// x^e by repeated multiplication; deterministic, no libm dispatch.
double int_pow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

double PowerLinearParams::drift_ratio(double y) const {
  return theta - c * int_pow(y, q - 1);
}

SdeProblem power_linear_problem(double theta, double c, int q, double sigma,
                                double x0, double horizon) {
  if (q < 3 || q % 2 == 0) {
    throw std::invalid_argument(
        "power_linear_problem: q must be odd >= 3, got " + std::to_string(q));
  }
  if (c < 0.0) {
    throw std::invalid_argument("power_linear_problem: c must be >= 0, got " +
                                std::to_string(c));
  }
  if (!(horizon > 0.0)) {
    throw std::invalid_argument(
        "power_linear_problem: horizon must be > 0, got " +
        std::to_string(horizon));
  }
  PowerLinearParams params{theta, c, q, sigma};
  SdeProblem problem;
  // a(x) = (theta - c*x^(q-1)) * x: the same expression the geometric
  // splitting freezes, so Assumption-A consistency is an identity, not a
  // tolerance.
  problem.drift = [params](double x) { return params.drift_ratio(x) * x; };
  problem.diffusion = [sigma](double x) { return sigma * x; };
  problem.x0 = x0;
  problem.horizon = horizon;
  problem.family = params;
  return problem;
}

Splitting geometric_splitting(const SdeProblem& problem) {
  if (!problem.has_family()) {
    throw UnsupportedProblemError(
        "geometric_splitting: problem has no closed-form coefficient ratios "
        "(not in the built-in family)");
  }
  const PowerLinearParams params = *problem.family;
  Splitting s;
  s.f = [params](double x, double y) { return params.drift_ratio(y) * x; };
  s.g = [params](double x, double y) {
    return params.diffusion_ratio(y) * x;
  };
  s.solver = StepSolverKind::geometric_linear;
  s.alpha = [params](double y) { return params.drift_ratio(y); };
  s.beta = [params](double y) { return params.diffusion_ratio(y); };
  return s;
}

Splitting euler_splitting(const SdeProblem& problem) {
  Splitting s;
  s.f = [a = problem.drift](double, double y) { return a(y); };
  s.g = [b = problem.diffusion](double, double y) { return b(y); };
  s.solver = StepSolverKind::constant_coefficient;
  s.alpha = problem.drift;
  s.beta = problem.diffusion;
  return s;
}

double check_consistency(const Splitting& splitting, const SdeProblem& problem,
                         std::span<const double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("check_consistency: empty sample set");
  }
  double worst = 0.0;
  for (double x : samples) {
    const double dev = std::abs(splitting.f(x, x) - problem.drift(x)) +
                       std::abs(splitting.g(x, x) - problem.diffusion(x));
    if (dev > worst) worst = dev;
  }
  return worst;
}

}  // namespace sde
