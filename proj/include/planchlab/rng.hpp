#pragma once

#include <cmath>
#include <cstdint>

namespace planch {

/// CLI-facing seed. Per-sample generators are derived from (seed, sample index)
/// by counter mixing, so results do not depend on how samples are scheduled
/// across threads.
struct RngSeed {
  std::uint64_t value = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace detail

/// xoshiro256** seeded through splitmix64. Self-contained so that streams are
/// bit-identical across compilers and standard libraries.
class RngStream {
 public:
  RngStream() : RngStream(RngSeed{0}, 0) {}

  RngStream(RngSeed seed, std::uint64_t stream_index) {
    std::uint64_t sm = seed.value ^ (stream_index * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
    s_[0] = detail::splitmix64(sm);
    s_[1] = detail::splitmix64(sm);
    s_[2] = detail::splitmix64(sm);
    s_[3] = detail::splitmix64(sm);
    s_[3] |= 1;  // the all-zero state is absorbing
  }

  std::uint64_t next() {
    const std::uint64_t result = detail::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Unbiased integer in [0, n), n >= 1. Rejection keeps the draw exact.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Standard normal via Box-Muller (both values used, cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1, u2;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t s_[4];
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace planch
