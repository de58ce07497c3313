#include "sde/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sde {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                      std::uint32_t& hi) {
  const std::uint64_t product =
      static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
  lo = static_cast<std::uint32_t>(product);
  hi = static_cast<std::uint32_t>(product >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
  std::uint32_t lo0, hi0, lo1, hi1;
  mul_hi_lo(kPhiloxM0, ctr[0], lo0, hi0);
  mul_hi_lo(kPhiloxM1, ctr[2], lo1, hi1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

// 53-bit uniform in (0, 1]; never 0, so log() is safe.
inline double uniform_open_closed(std::uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// 53-bit uniform in [0, 1).
inline double uniform_closed_open(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct NormalPair {
  double even;
  double odd;
};

NormalPair box_muller_block(std::uint64_t master_seed,
                            std::uint64_t path_index, std::uint64_t block) {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block),
      static_cast<std::uint32_t>(block >> 32),
      static_cast<std::uint32_t>(path_index),
      static_cast<std::uint32_t>(path_index >> 32)};
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(master_seed),
      static_cast<std::uint32_t>(master_seed >> 32)};
  const auto out = philox4x32_10(counter, key);
  const std::uint64_t bits_a =
      static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
  const std::uint64_t bits_b =
      static_cast<std::uint64_t>(out[2]) | (static_cast<std::uint64_t>(out[3]) << 32);
  const double u1 = uniform_open_closed(bits_a);
  const double u2 = uniform_closed_open(bits_b);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi_v<double> * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> ctr = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, k);
    if (round < 9) {
      k = {k[0] + kPhiloxW0, k[1] + kPhiloxW1};
    }
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t path_index)
    : master_seed_(master_seed), path_index_(path_index) {}

double RngStream::normal(std::uint64_t i) const {
  const NormalPair pair = box_muller_block(master_seed_, path_index_, i >> 1);
  return (i & 1) ? pair.odd : pair.even;
}

std::vector<double> RngStream::normals(std::uint64_t count) const {
  std::vector<double> out(count);
  for (std::uint64_t i = 0; i < count; i += 2) {
    const NormalPair pair = box_muller_block(master_seed_, path_index_, i >> 1);
    out[i] = pair.even;
    if (i + 1 < count) out[i + 1] = pair.odd;
  }
  return out;
}

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t path_index) {
  return RngStream(master_seed, path_index);
}

BrownianIncrements sample_increments(const TimeGrid& grid,
                                     const RngStream& stream) {
  BrownianIncrements incs;
  incs.grid = grid;
  incs.master_seed = stream.master_seed();
  incs.path_index = stream.path_index();
  incs.level = 1;
  const auto n = static_cast<std::uint64_t>(grid.steps);
  const double scale = std::sqrt(grid.delta);
  incs.dw = stream.normals(n);
  for (double& d : incs.dw) d *= scale;
  incs.w.resize(n + 1);
  incs.w[0] = 0.0;
  for (std::uint64_t k = 0; k < n; ++k) incs.w[k + 1] = incs.w[k] + incs.dw[k];
  return incs;
}

BrownianIncrements increments_from_dw(const TimeGrid& grid,
                                      std::vector<double> dw) {
  if (static_cast<std::int64_t>(dw.size()) != grid.steps) {
    throw std::invalid_argument(
        "increments_from_dw: need exactly one increment per step");
  }
  BrownianIncrements incs;
  incs.grid = grid;
  incs.dw = std::move(dw);
  incs.w.resize(incs.dw.size() + 1);
  incs.w[0] = 0.0;
  for (std::size_t k = 0; k < incs.dw.size(); ++k) {
    incs.w[k + 1] = incs.w[k] + incs.dw[k];
  }
  return incs;
}

BrownianIncrements coarsen(const BrownianIncrements& incs,
                           std::int64_t factor) {
  const std::int64_t n = incs.grid.steps;
  if (factor < 1 || n % factor != 0) {
    throw std::invalid_argument("coarsen: factor " + std::to_string(factor) +
                                " does not divide step count " +
                                std::to_string(n));
  }
  if (factor == 1) return incs;
  const std::int64_t m = n / factor;
  BrownianIncrements out;
  out.grid = make_grid(incs.grid.horizon, m);
  out.master_seed = incs.master_seed;
  out.path_index = incs.path_index;
  out.level = incs.level * factor;
  out.w.resize(m + 1);
  for (std::int64_t j = 0; j <= m; ++j) out.w[j] = incs.w[j * factor];
  out.dw.resize(m);
  for (std::int64_t j = 0; j < m; ++j) out.dw[j] = out.w[j + 1] - out.w[j];
  return out;
}

const std::vector<double>& cumulative(const BrownianIncrements& incs) {
  return incs.w;
}

}  // namespace sde
