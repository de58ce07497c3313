#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sde/grid.hpp"

namespace sde {

// Philox-4x32-10 counter-based block cipher (Salmon et al., SC'11).
// Exposed for the known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key);

// Reproducible Gaussian stream keyed by (master_seed, path_index).
//
// Draw i is a pure function of (master_seed, path_index, i): block i/2 is
// Philox-4x32-10 with key = master_seed and counter = (block, path_index),
// the block's 128 bits make two uniforms u1 in (0,1], u2 in [0,1), and the
// Box-Muller pair r*cos(2*pi*u2), r*sin(2*pi*u2) with r = sqrt(-2*ln(u1))
// supplies draws 2j and 2j+1. No state is consumed, so streams for distinct
// paths never interact and evaluation order is irrelevant.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t path_index);

  // i-th standard normal draw of this stream.
  double normal(std::uint64_t i) const;

  // Draws 0..count-1, computing each Box-Muller block once.
  std::vector<double> normals(std::uint64_t count) const;

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t path_index() const { return path_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t path_index_;
};

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t path_index);

// Brownian increments dW_k ~ Normal(0, delta) on a grid, together with the
// node values W_k of the underlying path (w[0] = 0, ascending prefix sums).
// Coarsening keeps the node values of the same path: coarse node values are
// subsamples of fine ones, coarse increments their consecutive differences,
// so couplings across refinement levels are exact.
struct BrownianIncrements {
  TimeGrid grid;
  std::vector<double> dw;  // length grid.steps
  std::vector<double> w;   // length grid.steps + 1
  std::uint64_t master_seed = 0;
  std::uint64_t path_index = 0;
  std::int64_t level = 1;  // coarsening factor relative to the sampled grid
};

// n draws sqrt(delta) * Z_k from the stream, W accumulated in ascending
// index order.
BrownianIncrements sample_increments(const TimeGrid& grid,
                                     const RngStream& stream);

// Wraps raw increments (tests, debug dumps); W is rebuilt as prefix sums.
BrownianIncrements increments_from_dw(const TimeGrid& grid,
                                      std::vector<double> dw);

// Merges blocks of `factor` consecutive increments; factor must divide the
// step count. Node values at surviving nodes are preserved bit-for-bit, so
// coarsen(coarsen(x, 2), 2) == coarsen(x, 4) and cumulative values commute
// with coarsening exactly.
BrownianIncrements coarsen(const BrownianIncrements& incs,
                           std::int64_t factor);

// Node values W_0 = 0, W_{k+1} = W_k + dW_k.
const std::vector<double>& cumulative(const BrownianIncrements& incs);

}  // namespace sde
