#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "homset/errors.hpp"

namespace homset {

// All randomness in the library flows through this wrapper. The engine is
// std::mt19937_64, whose output sequence is pinned bit-for-bit by the C++
// standard, and bounded draws use explicit rejection sampling because
// std::uniform_int_distribution is not portable across stdlib
// implementations. Identical seeds therefore give identical outputs on
// every platform, and the scheme is reproducible in other languages from
// the reference MT19937-64 implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform draw from [0, bound). Rejection over the largest multiple of
  // bound below 2^64 removes modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInput("Rng::below: bound must be positive");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 eng_;
};

// SplitMix64 finalizer; used to derive per-task seeds from a base seed.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream));
}

// count distinct values from [0, universe), sorted ascending. Rejection on
// a hash set; callers keep count <= universe/2 so the expected number of
// draws stays below 2*count.
inline std::vector<std::uint64_t> sample_distinct(Rng& rng,
                                                  std::uint64_t universe,
                                                  std::uint64_t count) {
  if (count > universe)
    throw InvalidInput("sample_distinct: count exceeds universe");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(std::size_t(count) * 2);
  while (seen.size() < count) seen.insert(rng.below(universe));
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homset
