#pragma once

#include <cstdint>
#include <random>

namespace qtorus {

// Derives an independent substream seed from a base seed and up to two tags
// (splitmix64 finalizer). Used so that sample (n, index) gets its own stream
// regardless of evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag_a, std::uint64_t tag_b = 0);

// mt19937_64 wrapper with hand-rolled draws. The standard engine is portable;
// the standard *distributions* are not, so uniform/normal are implemented here
// to keep outputs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive. Rejection sampling, unbiased.
  int uniform_int(int lo, int hi);

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qtorus
