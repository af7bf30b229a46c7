#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace peno {

// SplitMix64 finalizer (Stafford mix 13). Stateless; the basis of every
// random stream in the project so that draws are addressable by
// (seed, purpose, moment, node/pair) and independent of evaluation order.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// Folds one word into a stream key. Chain to build hierarchical keys:
// derive_key(derive_key(seed, purpose), moment).
constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t word) noexcept {
  return mix64((key + kGoldenGamma) ^ mix64(word + kGoldenGamma));
}

template <class... Words>
constexpr std::uint64_t stream_key(std::uint64_t root, Words... words) noexcept {
  std::uint64_t key = mix64(root + kGoldenGamma);
  ((key = derive_key(key, static_cast<std::uint64_t>(words))), ...);
  return key;
}

// Purpose tags keeping unrelated streams disjoint under one root seed.
enum class Stream : std::uint64_t {
  kInit = 0x01,
  kTies = 0x02,
  kTrendNoise = 0x03,
  kTraining = 0x04,
  kForecast = 0x05,
  kScores = 0x06,
};

constexpr std::uint64_t stream_key(std::uint64_t root, Stream purpose, std::uint64_t a) noexcept {
  return stream_key(root, static_cast<std::uint64_t>(purpose), a);
}
constexpr std::uint64_t stream_key(std::uint64_t root, Stream purpose) noexcept {
  return stream_key(root, static_cast<std::uint64_t>(purpose));
}

// Counter-based generator over a derived key: state advances by the golden
// gamma, output is the mixed state (SplitMix64). Cheap to construct, so one
// instance per (moment, node) substream is the intended usage.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : state_(key) {}

  std::uint64_t next_u64() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; always consumes exactly two words.
  double normal() noexcept {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n), n >= 1. Multiply-shift; bias is O(n / 2^64).
  std::uint64_t uniform_index(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Single uniform draw addressed by (key, counter); equals the (counter+1)-th
// uniform of CounterRng(key).
inline double uniform_at(std::uint64_t key, std::uint64_t counter) noexcept {
  return static_cast<double>(mix64(key + kGoldenGamma * (counter + 1)) >> 11) * 0x1.0p-53;
}

}  // namespace peno
