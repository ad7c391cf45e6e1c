#pragma once

#include <cstdint>
#include <random>

namespace asymlink {

/// Reproducible random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are implementation-defined, so all
/// conversions to reals and bounded integers are done here by hand; a seed
/// therefore yields the same stream on every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound). bound must be > 0.
  /// Lemire's multiply-shift with rejection, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Independent child stream, e.g. one per realization.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over (base, index)
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace asymlink
