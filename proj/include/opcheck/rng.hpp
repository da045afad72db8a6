#ifndef OPCHECK_RNG_HPP
#define OPCHECK_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace opcheck::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 output finalizer.  Used both as the stream's output stage
/// and to derive statistically independent substream seeds.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Seed of the `index`-th substream of `master`.  Trials never share a
/// stream: trial i always draws from derive_seed(master, i) regardless
/// of what other trials did.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master + kGolden) ^ (mix64(index + 1) * kGolden));
}

/// Deterministic SplitMix64 stream.  All randomness in the library flows
/// through this type so that any draw is reproducible from (seed, call
/// sequence) alone, independent of platform libc.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  /// Standard normal via Box-Muller (hand-rolled: std::normal_distribution
  /// is not bit-stable across standard libraries).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 6.283185307179586476925286766559 * uniform();
    cached_ = r * std::sin(t);
    have_cached_ = true;
    return r * std::cos(t);
  }

  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Stream for trial `index` under master seed `master`.
inline Stream substream(std::uint64_t master, std::uint64_t index) {
  return Stream(derive_seed(master, index));
}

}  // namespace opcheck::rng

#endif  // OPCHECK_RNG_HPP
