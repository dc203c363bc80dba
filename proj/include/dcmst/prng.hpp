#pragma once

#include <cstdint>

namespace dcmst {

// One shared PRNG definition for the whole project. Every random decision
// (graph generation, edge shuffles, prune/attach draws, pair selection) goes
// through these generators so that runs are bit-reproducible across
// platforms, thread counts and processes.

// splitmix64 finalizer, used both for one-shot seed derivation and as the
// stream that seeds xoshiro state.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** with splitmix64 state expansion.
class Xoshiro256ss {
 public:
  explicit constexpr Xoshiro256ss(std::uint64_t seed) : s_{} {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  constexpr std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Unbiased draw from [0, bound) by rejection. bound must be > 0.
  constexpr std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Deterministic per-trial seed derivation. The same schedule drives the
// in-process worker pool and remote satellites, which is what makes the two
// execution modes produce identical trajectories.
//
// Index packing: generation occupies bits 32.., tree slot bits 16..31,
// trial index bits 0..15, so tuples are injective for slot < 2^16 and
// trial < 2^16. Slot 0xFFFF is reserved for the per-generation pair
// selection draw and is never a population slot. Initial population trees
// take their seeds at generation 0; step() always works at generation >= 1,
// so initializer and trial seeds cannot collide.
class SeedSchedule {
 public:
  explicit constexpr SeedSchedule(std::uint64_t master_seed)
      : master_(master_seed) {}

  static constexpr std::uint32_t kSelectionSlot = 0xFFFF;

  constexpr std::uint64_t seed(std::uint64_t generation, std::uint32_t tree_slot,
                               std::uint32_t trial_index) const {
    return splitmix64(master_ ^ (generation << 32) ^
                      (static_cast<std::uint64_t>(tree_slot) << 16) ^
                      static_cast<std::uint64_t>(trial_index));
  }

  constexpr std::uint64_t selection_seed(std::uint64_t generation) const {
    return seed(generation, kSelectionSlot, 0);
  }

  constexpr std::uint64_t master() const { return master_; }

 private:
  std::uint64_t master_;
};

// FNV-1a over raw bytes; words are hashed through their little-endian bytes
// so the value matches the wire representation.
constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a64_byte(std::uint64_t hash, std::uint8_t byte) {
  return (hash ^ byte) * kFnvPrime;
}

constexpr std::uint64_t fnv1a64_word(std::uint64_t hash, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    hash = fnv1a64_byte(hash, static_cast<std::uint8_t>(word >> (8 * i)));
  }
  return hash;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t hash = kFnvOffsetBasis) {
  const auto* bytes = static_cast<const std::uint8_t*>(data);
  for (std::size_t i = 0; i < len; ++i) hash = fnv1a64_byte(hash, bytes[i]);
  return hash;
}

}  // namespace dcmst
