#pragma once

#include <cstdint>

namespace sde {

// Uniform partition 0 = t_0 < t_1 < ... < t_n = T with spacing delta = T/n.
// delta is computed once at construction; nodes are k*delta, never running
// sums, so node(k) is exact in the sense |node(k) - k*delta| = 0.
struct TimeGrid {
  double horizon = 0.0;  // T
  std::int64_t steps = 0;  // n
  double delta = 0.0;  // T / n

  double node(std::int64_t k) const { return static_cast<double>(k) * delta; }
  std::int64_t node_count() const { return steps + 1; }
};

// Throws std::invalid_argument unless horizon > 0 and steps >= 1.
TimeGrid make_grid(double horizon, std::int64_t steps);

// Largest k with t_k <= t. The right endpoint t = T maps to n.
// Throws std::invalid_argument for t outside [0, T].
std::int64_t floor_index(const TimeGrid& grid, double t);

}  // namespace sde
