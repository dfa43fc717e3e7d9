#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace capca {

/// Seedable generator with portable output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The std distributions are implementation-defined, so uniform and
/// normal variates are derived here from raw engine words to keep sampled data
/// identical across standard libraries.
///
/// Independent streams are derived with substream(seed, tag, index): the
/// engine is seeded with splitmix64-mixed (seed, FNV-1a(tag), index). Every
/// parallel consumer in the library draws from the stream of its own slot, so
/// results never depend on the number of workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::string_view tag, std::uint64_t index);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via the Box-Muller transform; the second variate is cached.
  double normal();

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace capca
