#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels for the color-set algebra. Every operation has a scalar
// reference implementation and, on x86-64 with AVX2, a vectorized variant;
// the active table is chosen once at startup and the two are required to be
// bit-identical (equivalence-tested in tests/test_core.cpp).

namespace linforest::bitops {

using word = std::uint64_t;

struct Kernels {
  const char* name;

  // dst = a & b
  void (*and2)(word* dst, const word* a, const word* b, std::size_t n);
  // dst = a | b
  void (*or2)(word* dst, const word* a, const word* b, std::size_t n);
  // dst = a & ~b
  void (*andnot2)(word* dst, const word* a, const word* b, std::size_t n);
  // dst = a & b & c
  void (*and3)(word* dst, const word* a, const word* b, const word* c, std::size_t n);
  // dst = a & ~(b | c)
  void (*diff2)(word* dst, const word* a, const word* b, const word* c, std::size_t n);

  std::uint64_t (*popcount)(const word* a, std::size_t n);
  std::uint64_t (*popcount_and2)(const word* a, const word* b, std::size_t n);
  std::uint64_t (*popcount_and3)(const word* a, const word* b, const word* c, std::size_t n);
  // |a & ~(b | c)|
  std::uint64_t (*popcount_diff2)(const word* a, const word* b, const word* c, std::size_t n);
};

const Kernels& scalar_kernels();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const Kernels* avx2_kernels();

// The runtime-selected table (AVX2 when available, scalar otherwise).
const Kernels& active();

// Test hook: force the scalar table regardless of CPU support.
void force_scalar(bool on);

}  // namespace linforest::bitops
