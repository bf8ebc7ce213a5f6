#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "linboltz/core.hpp"

namespace linboltz {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A block of four 32-bit words is a pure function of (counter, key), so any
// (seed, step, particle) tuple owns an independent, reproducible stream no
// matter how the work is partitioned across threads.
struct Philox4x32 {
  static constexpr std::uint32_t kMult0 = 0xD2511F53u;
  static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

// Stream classes keep draws for different purposes disjoint even when they
// share the same (seed, step, index) coordinates.
enum class StreamClass : std::uint32_t {
  InitPosition = 0,
  InitVelocity = 1,
  Collision = 2,
  Generic = 3,
};

// Lazy word stream for one (seed, class, step, index) coordinate. Words are
// produced on demand; unused words cost nothing.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, StreamClass cls, std::uint64_t step,
             std::uint64_t index)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        base_{0u, static_cast<std::uint32_t>(index),
              static_cast<std::uint32_t>(index >> 32) ^
                  (static_cast<std::uint32_t>(cls) << 24),
              static_cast<std::uint32_t>(step)} {}

  std::uint32_t next_u32() {
    if (word_ == 4) {
      base_[0] += 1;
      word_ = 0;
    }
    if (word_ == 0) buffer_ = Philox4x32::block(base_, key_);
    return buffer_[word_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform double in (0,1): 53 random bits, offset off zero so log() is safe.
  double u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53 + 0x1p-54;
  }

  // Standard normal pair via Box-Muller.
  std::array<double, 2> normal2() {
    const double r = std::sqrt(-2.0 * std::log(u01()));
    const double phi = 2.0 * kPi * u01();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  Vec3 normal3() {
    const auto ab = normal2();
    const auto cd = normal2();
    return {ab[0], ab[1], cd[0]};
  }

  // Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = 2.0 * u01() - 1.0;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * kPi * u01();
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> base_;
  std::array<std::uint32_t, 4> buffer_{};
  int word_ = 0;
};

}  // namespace linboltz
