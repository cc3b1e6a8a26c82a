#include "linforest/bitops.hpp"

#include <atomic>
#include <bit>

namespace linforest::bitops {

namespace {

void s_and2(word* dst, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void s_or2(word* dst, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void s_andnot2(word* dst, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void s_and3(word* dst, const word* a, const word* b, const word* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i] & c[i];
}

void s_diff2(word* dst, const word* a, const word* b, const word* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~(b[i] | c[i]);
}

std::uint64_t s_popcount(const word* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
  return total;
}

std::uint64_t s_popcount_and2(const word* a, const word* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::uint64_t s_popcount_and3(const word* a, const word* b, const word* c, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i] & c[i]));
  return total;
}

std::uint64_t s_popcount_diff2(const word* a, const word* b, const word* c, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    total += static_cast<std::uint64_t>(std::popcount(a[i] & ~(b[i] | c[i])));
  return total;
}

constexpr Kernels kScalar = {
    "scalar",        s_and2,          s_or2,           s_andnot2,        s_and3,
    s_diff2,         s_popcount,      s_popcount_and2, s_popcount_and3,  s_popcount_diff2,
};

std::atomic<bool> g_force_scalar{false};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

const Kernels& active() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return kScalar;
  static const Kernels* selected = [] {
    if (const Kernels* v = avx2_kernels()) return v;
    return &kScalar;
  }();
  return *selected;
}

}  // namespace linforest::bitops
