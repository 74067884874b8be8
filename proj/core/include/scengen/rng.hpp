#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace scengen {

// splitmix64; used to derive independent stream keys from a root seed.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic counter-free generator (xoshiro256**) with explicit stream
// derivation: fork(a, b) yields a stream that depends only on the root key
// and (a, b), never on how many values the parent has drawn. Optimizer code
// forks one stream per (iteration, individual) so results are independent of
// evaluation scheduling order and identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {
    std::uint64_t z = seed;
    for (auto& word : state_) word = mix64(z++);
  }

  Rng fork(std::uint64_t a, std::uint64_t b = 0) const {
    return Rng(mix64(key_ ^ mix64(a ^ mix64(b + 0x632be59bd9b4e019ULL))));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller (no cached spare; fully reproducible).
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t key_;
  std::uint64_t state_[4];
};

}  // namespace scengen
