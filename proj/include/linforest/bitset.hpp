#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "linforest/bitops.hpp"

namespace linforest {

// Fixed-universe dynamic bitset. Used both for color sets (universe = palette
// size) and edge subsets (universe = edge count). Set algebra runs through
// the dispatched word kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : bits_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(std::size_t universe) {
    Bitset s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* words() const { return words_.data(); }
  std::uint64_t* words() { return words_.data(); }

  bool test(std::size_t i) const {
    assert(i < bits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    return bitops::active().popcount(words_.data(), words_.size());
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // First set bit at index >= from, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t next(std::size_t from = 0) const {
    if (from >= bits_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = next(); i != npos; i = next(i + 1)) fn(i);
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(bits_ == o.bits_);
    bitops::active().and2(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(bits_ == o.bits_);
    bitops::active().or2(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  // set difference
  Bitset& operator-=(const Bitset& o) {
    assert(bits_ == o.bits_);
    bitops::active().andnot2(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return bits_ == o.bits_ && words_ == o.words_; }

  // r = a & b & c
  static Bitset and3(const Bitset& a, const Bitset& b, const Bitset& c) {
    assert(a.bits_ == b.bits_ && b.bits_ == c.bits_);
    Bitset r(a.bits_);
    bitops::active().and3(r.words_.data(), a.words_.data(), b.words_.data(), c.words_.data(),
                          r.words_.size());
    return r;
  }
  // r = a \ (b | c)
  static Bitset diff2(const Bitset& a, const Bitset& b, const Bitset& c) {
    assert(a.bits_ == b.bits_ && b.bits_ == c.bits_);
    Bitset r(a.bits_);
    bitops::active().diff2(r.words_.data(), a.words_.data(), b.words_.data(), c.words_.data(),
                           r.words_.size());
    return r;
  }
  static std::size_t count_and3(const Bitset& a, const Bitset& b, const Bitset& c) {
    return bitops::active().popcount_and3(a.words_.data(), b.words_.data(), c.words_.data(),
                                          a.words_.size());
  }
  static std::size_t count_diff2(const Bitset& a, const Bitset& b, const Bitset& c) {
    return bitops::active().popcount_diff2(a.words_.data(), b.words_.data(), c.words_.data(),
                                           a.words_.size());
  }
  static std::size_t count_and2(const Bitset& a, const Bitset& b) {
    return bitops::active().popcount_and2(a.words_.data(), b.words_.data(), a.words_.size());
  }

  bool intersects(const Bitset& o) const {
    assert(bits_ == o.bits_);
    return count_and2(*this, o) != 0;
  }

 private:
  void trim() {
    if (bits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (bits_ & 63));
    if (bits_ == 0 && !words_.empty()) words_.back() = 0;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace linforest
