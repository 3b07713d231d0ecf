#pragma once

#include <cmath>
#include <cstdint>

namespace gridprice {

/// SplitMix64. Chosen over std::mt19937 because the whole state transition
/// fits in three lines, so any other implementation (tests, python, a reader
/// with a calculator) can reproduce every generated scenario bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) via 128-bit multiply-shift; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Poisson(alpha) by CDF inversion: smallest x with u < F(x). The loop is
  /// capped far beyond any realistic quantile so a pathological u cannot spin.
  std::uint64_t next_poisson(double alpha) {
    const double u = next_unit();
    double pmf = std::exp(-alpha);
    double cdf = pmf;
    std::uint64_t x = 0;
    const std::uint64_t cap =
        static_cast<std::uint64_t>(alpha + 40.0 * std::sqrt(alpha) + 100.0);
    while (u >= cdf && x < cap) {
      ++x;
      pmf *= alpha / static_cast<double>(x);
      cdf += pmf;
    }
    return x;
  }

  /// Deterministic re-seeding for independent substreams.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (b + 0x9E3779B97F4A7C15ULL));
    g.next();
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace gridprice
