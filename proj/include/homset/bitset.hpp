#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace homset {

// Fixed-universe bitset over 64-bit words. Bits past size() stay zero so
// whole-word operations (count, and_count) never see garbage.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.mask_tail();
    return b;
  }

  int universe() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set bit, or -1.
  int find_first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return int(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
  }

  // Lowest set bit strictly above i, or -1.
  int find_next(int i) const {
    if (i + 1 >= nbits_) return -1;
    int start = i + 1;
    std::size_t wi = std::size_t(start) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference: this \ o.
  Bitset& operator-=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset&) const = default;

  // popcount(a & b) without allocating.
  static int and_count(const Bitset& a, const Bitset& b) {
    assert(a.nbits_ == b.nbits_);
    int c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  static bool intersects(const Bitset& a, const Bitset& b) {
    assert(a.nbits_ == b.nbits_);
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] & b.words_[i]) return true;
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(int(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(std::size_t(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  static std::size_t word_count(int nbits) {
    assert(nbits >= 0);
    return (std::size_t(nbits) + 63) / 64;
  }
  void mask_tail() {
    if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace homset
