#pragma once

#include <cmath>
#include <cstdint>

namespace bdg {

/// SplitMix64 finalizer: a stateless 64-bit mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Counter-based per-path random stream. Draw i of path p under seed s is a
/// pure function of (s, p, i): out_i = mix64(key(s, p) + i * golden). Results
/// are therefore independent of execution order and thread count.
class PathRng {
public:
  PathRng(std::uint64_t seed, std::uint64_t path)
      : key_(mix64(mix64(seed + kGolden) ^ (0xD2B74407B1CE6E93ull * (path + 1)))) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second value of each pair is cached
  /// inside the path-local stream.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], safe for log
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Poisson count by Knuth's multiplication method; intended for the small
  /// per-step means lambda * dt.
  long poisson(double mean) {
    const double limit = std::exp(-mean);
    long k = 0;
    double product = 1.0;
    do {
      ++k;
      product *= uniform();
    } while (product > limit);
    return k - 1;
  }

private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bdg
