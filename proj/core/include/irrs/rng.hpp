#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace irrs {

// SplitMix64 finalizer. Used to derive independent sub-seeds from a master
// seed and an index: trial i gets splitmix64(master + i).
inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + index);
}

// Seedable 64-bit generator. Wraps std::mt19937_64, whose output sequence is
// fully specified by the standard, so streams reproduce across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return eng_(); }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // Uniform integer in [0, bound), bound >= 1. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return r % bound;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace irrs
