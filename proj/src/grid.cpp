#include "sde/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sde {

TimeGrid make_grid(double horizon, std::int64_t steps) {
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("make_grid: horizon must be > 0, got " +
                                std::to_string(horizon));
  }
  if (steps < 1) {
    throw std::invalid_argument("make_grid: steps must be >= 1, got " +
                                std::to_string(steps));
  }
  TimeGrid grid;
  grid.horizon = horizon;
  grid.steps = steps;
  grid.delta = horizon / static_cast<double>(steps);
  return grid;
}

std::int64_t floor_index(const TimeGrid& grid, double t) {
  if (!(t >= 0.0) || !(t <= grid.horizon)) {
    throw std::invalid_argument("floor_index: t = " + std::to_string(t) +
                                " outside [0, " +
                                std::to_string(grid.horizon) + "]");
  }
  if (t == grid.horizon) return grid.steps;  // right endpoint convention
  auto k = static_cast<std::int64_t>(std::floor(t / grid.delta));
  if (k < 0) k = 0;
  if (k > grid.steps) k = grid.steps;
  // t/delta rounds, so correct against the node formula itself.
  while (k + 1 <= grid.steps && grid.node(k + 1) <= t) ++k;
  while (k > 0 && grid.node(k) > t) --k;
  return k;
}

}  // namespace sde
