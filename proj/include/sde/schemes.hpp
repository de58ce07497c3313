#pragma once

#include <cmath>

#include "sde/path.hpp"
#include "sde/problem.hpp"
#include "sde/rng.hpp"

namespace sde {

// A splitting names a solver kind its coefficients do not support, or its
// callables are missing.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact solution at step end of dy = alpha ds + beta dW with frozen
// constants: y + alpha*delta + beta*dw. Inline so every caller computes the
// identical expression.
inline double constant_coefficient_step(double y, double alpha, double beta,
                                        double delta, double dw) {
  return y + alpha * delta + beta * dw;
}

// Exact solution at step end of dy = alpha*y ds + beta*y dW with frozen
// rates: y * exp((alpha - beta^2/2)*delta + beta*dw). Output carries the
// sign of y; for y > 0 it is strictly positive for every delta and dw.
inline double geometric_exact_step(double y, double alpha, double beta,
                                   double delta, double dw) {
  return y * std::exp((alpha - 0.5 * beta * beta) * delta + beta * dw);
}

// Euler-Maruyama: y_{k+1} = y_k + a(y_k)*delta + b(y_k)*dW_k. Non-finite
// values propagate; divergence is a measured outcome, not an error.
SchemePath euler_path(const SdeProblem& problem,
                      const BrownianIncrements& incs);

// Drift-tamed Euler: y_{k+1} = y_k + delta*a(y_k)/(1 + delta*|a(y_k)|)
//                                   + b(y_k)*dW_k.
SchemePath tamed_euler_path(const SdeProblem& problem,
                            const BrownianIncrements& incs);

// Freezes the splitting's second argument at each step's left endpoint and
// applies the splitting's exact step solver. With euler_splitting this
// reproduces euler_path bit-for-bit; with geometric_splitting and x0 > 0
// every node value is strictly positive.
SchemePath semidiscrete_path(const SdeProblem& problem,
                             const Splitting& splitting,
                             const BrownianIncrements& incs);

}  // namespace sde
