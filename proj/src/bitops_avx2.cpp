// AVX2 variants of the color-set word kernels. Compiled with -mavx2 for this
// translation unit only; the dispatcher checks CPU support before handing
// this table out. Popcount in the vector loops stays on the 64-bit POPCNT
// path (std::popcount) since horizontal byte-LUT popcounts only win on much
// longer arrays than a color palette produces.

#include "linforest/bitops.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define LINFOREST_HAVE_X86 1
#include <immintrin.h>
#else
#define LINFOREST_HAVE_X86 0
#endif

#include <bit>

namespace linforest::bitops {

#if LINFOREST_HAVE_X86 && defined(__AVX2__)

namespace {

inline __m256i load(const word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void v_and2(word* dst, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void v_or2(word* dst, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void v_andnot2(word* dst, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void v_and3(word* dst, const word* a, const word* b, const word* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst + i, _mm256_and_si256(_mm256_and_si256(load(a + i), load(b + i)), load(c + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i] & c[i];
}

void v_diff2(word* dst, const word* a, const word* b, const word* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst + i, _mm256_andnot_si256(_mm256_or_si256(load(b + i), load(c + i)), load(a + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~(b[i] | c[i]);
}

inline std::uint64_t hsum_popcount(__m256i v) {
  alignas(32) word lane[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lane), v);
  return static_cast<std::uint64_t>(std::popcount(lane[0])) + std::popcount(lane[1]) +
         std::popcount(lane[2]) + std::popcount(lane[3]);
}

std::uint64_t v_popcount(const word* a, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) total += hsum_popcount(load(a + i));
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
  return total;
}

std::uint64_t v_popcount_and2(const word* a, const word* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) total += hsum_popcount(_mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::uint64_t v_popcount_and3(const word* a, const word* b, const word* c, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    total += hsum_popcount(_mm256_and_si256(_mm256_and_si256(load(a + i), load(b + i)), load(c + i)));
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i] & c[i]));
  return total;
}

std::uint64_t v_popcount_diff2(const word* a, const word* b, const word* c, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    total += hsum_popcount(_mm256_andnot_si256(_mm256_or_si256(load(b + i), load(c + i)), load(a + i)));
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & ~(b[i] | c[i])));
  return total;
}

constexpr Kernels kAvx2 = {
    "avx2",          v_and2,          v_or2,           v_andnot2,        v_and3,
    v_diff2,         v_popcount,      v_popcount_and2, v_popcount_and3,  v_popcount_diff2,
};

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels* table = [] {
    return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
  }();
  return table;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace linforest::bitops
