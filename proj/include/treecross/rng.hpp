#pragma once

#include <cstdint>
#include <random>

namespace treecross {

/// Seedable generator used everywhere randomness is needed.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, so a seed reproduces the same stream on every platform.
/// Bounded draws reject on the engine's native 64-bit range instead
/// of std::uniform_int_distribution, whose algorithm is unspecified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive. Exact: draws
  /// that would bias the result are rejected and redrawn.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Independent stream number `index` derived from `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace treecross
