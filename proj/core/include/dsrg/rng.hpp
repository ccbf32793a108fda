#pragma once

#include <cstdint>

namespace dsrg {

/// Counter-based 64-bit generator used wherever the library needs
/// reproducible randomness (sampled verification, search tie-breaking).
/// The state advances by the Weyl constant 0x9E3779B97F4A7C15 and each
/// output is finalized with the two multiply-xorshift rounds
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, so any two implementations
/// seeded alike produce the same stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) via the 128-bit multiply-shift map;
  /// deterministic across platforms for a fixed seed.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Independent stream derived from the current one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace dsrg
