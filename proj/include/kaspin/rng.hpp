#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace kaspin {

// SplitMix64: a counter-based 64-bit generator. The state advances by the
// constant 0x9E3779B97F4A7C15 and each output is the finalizer
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
// applied to the new state. Uniforms take the top 53 bits; normals use the
// cosine branch of Box-Muller on two consecutive uniforms. Everything here is
// spelled out so a campaign can be replayed by any implementation; the
// standard library distributions are implementation-defined and are avoided.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform in (0, 1].
  double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Independent stream derived from this generator's seed position.
  constexpr SplitMix64 fork(std::uint64_t stream) const {
    return SplitMix64(mix(state_ ^ mix(stream + kGamma)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace kaspin
