#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace cpoker {

// SplitMix64. Used for seed expansion and sub-seed derivation so that every
// implementation of this toolkit produces identical streams.
//
// Reference vector: seed 1234567 ->
//   6457827717110365317, 3203168211198807973, 9817491932198370423
struct SplitMix64 {
  std::uint64_t state;

  explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// xoshiro256**. State is filled from SplitMix64 per the generator's reference
// seeding recipe.
//
// Reference vector: raw state {1,2,3,4} -> 11520, 0, 1509978240
class Xoshiro256StarStar {
 public:
  explicit constexpr Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  explicit constexpr Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state)
      : state_(state) {}

  constexpr std::uint64_t next() {
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

  // Bounded draw, fixed as next() % n. Part of the determinism contract.
  constexpr std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

// Deterministic sub-seed for (seed, index) pairs: one SplitMix64 step from
// seed + (index + 1) * golden gamma. Lets rounds and players draw
// independent streams while staying reproducible and parallelizable.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 sm(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
  return sm.next();
}

// Fisher-Yates from the top index down with j = next() % (i + 1).
template <typename RandomIt>
inline void deterministic_shuffle(RandomIt first, RandomIt last, Xoshiro256StarStar& rng) {
  for (auto i = (last - first) - 1; i > 0; --i) {
    auto j = static_cast<decltype(i)>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(first[i], first[j]);
  }
}

}  // namespace cpoker
