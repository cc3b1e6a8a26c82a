#pragma once

#include <cstdint>
#include <random>

namespace linforest {

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence, and all derived draws below avoid std::*_distribution (whose
// output is implementation-defined), so identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_double() < p;
  }

  // Uniform in [0, n). Modulo bias is below 2^-32 for the bounds used here.
  std::uint64_t bounded(std::uint64_t n) { return n <= 1 ? 0 : gen_() % n; }

  // Independent stream for a named substage of a seeded computation.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace linforest
