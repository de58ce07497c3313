#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace sde {

// Requested for a problem outside the built-in power-linear family, e.g. a
// coefficient-frozen solver that needs closed-form ratios the problem
// cannot supply.
class UnsupportedProblemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of the built-in family a(x) = theta*x - c*x^q, b(x) = sigma*x
// with q odd >= 3 and c >= 0. The drift ratio a(y)/y = theta - c*y^(q-1)
// and diffusion ratio b(y)/y = sigma exist in closed form, so freezing the
// ratio never divides by y.
struct PowerLinearParams {
  double theta = 0.0;
  double c = 1.0;
  int q = 3;
  double sigma = 1.0;

  double drift_ratio(double y) const;      // theta - c*y^(q-1)
  double diffusion_ratio(double) const { return sigma; }
};

// Scalar autonomous SDE  dx = a(x) dt + b(x) dW  on [0, T] with x(0) = x0.
struct SdeProblem {
  std::function<double(double)> drift;      // a
  std::function<double(double)> diffusion;  // b
  double x0 = 1.0;
  double horizon = 1.0;  // T
  std::optional<PowerLinearParams> family;  // set for built-in problems

  bool has_family() const { return family.has_value(); }
};

// Builds a family problem. Throws std::invalid_argument for even q, q < 3,
// c < 0, or horizon <= 0. The drift is evaluated as (theta - c*x^(q-1))*x,
// identical bit-for-bit to the frozen-coefficient form used by splittings.
SdeProblem power_linear_problem(double theta, double c, int q, double sigma,
                                double x0, double horizon);

// How the per-step SDE with frozen coefficients is solved exactly.
enum class StepSolverKind {
  constant_coefficient,  // dy = alpha ds + beta dW
  geometric_linear,      // dy = alpha*y ds + beta*y dW
};

// Coefficient pair f(x,y), g(x,y) with f(x,x) = a(x) and g(x,x) = b(x).
// The second argument is the frozen (discretized) variable. alpha/beta give
// the frozen per-step coefficients as closed forms in the frozen state:
// additive constants for constant_coefficient, multiplicative rates for
// geometric_linear.
struct Splitting {
  std::function<double(double, double)> f;
  std::function<double(double, double)> g;
  StepSolverKind solver = StepSolverKind::constant_coefficient;
  std::function<double(double)> alpha;
  std::function<double(double)> beta;
};

// f(x,y) = (a(y)/y)*x, g(x,y) = (b(y)/y)*x with ratios in closed form; the
// frozen step SDE is linear with exponential solution. Requires a family
// problem; throws UnsupportedProblemError otherwise.
Splitting geometric_splitting(const SdeProblem& problem);

// f(x,y) = a(y), g(x,y) = b(y); the frozen step is an arithmetic increment,
// which reproduces the Euler scheme.
Splitting euler_splitting(const SdeProblem& problem);

// max over samples of |f(x,x) - a(x)| + |g(x,x) - b(x)|. Exactly 0 for the
// built-in constructors on family problems. Throws std::invalid_argument on
// an empty sample set.
double check_consistency(const Splitting& splitting, const SdeProblem& problem,
                         std::span<const double> samples);

}  // namespace sde
