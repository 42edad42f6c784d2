#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace ramsey_lab {

// All randomness in the library is drawn from SplitMix64. The generator is
// counter-based: the i-th output of the stream seeded with s is
// mix64(s + (i + 1) * kGolden), so any draw can be addressed directly by its
// index, independent of thread scheduling.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Output number `index` (0-based) of the SplitMix64 stream seeded with `seed`.
constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * kGolden);
}

/// Seed of the independent sub-stream `index` of a master seed (per-trial seeds).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master ^ 0x6a09e667f3bcc908ULL) + (index + 1) * 0xd1b54a32d192ed03ULL);
}

__extension__ using uint128 = unsigned __int128;

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Maps 64 random bits onto [0, bound) by multiply-shift.
constexpr std::uint64_t scale_below(std::uint64_t bits, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<uint128>(bits) * bound) >> 64);
}

/// Sequential SplitMix64 generator. Bounded draws use Lemire rejection so the
/// results are exact and identical on every platform (unlike std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  double uniform01() { return to_unit(next()); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    auto m = static_cast<uint128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<uint128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Fisher-Yates on the first `count` positions: afterwards items[0..count)
  /// is a uniform sample without replacement.
  template <class T>
  void partial_shuffle(std::span<T> items, std::size_t count) {
    for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
      const auto j = i + static_cast<std::size_t>(below(items.size() - i));
      using std::swap;
      swap(items[i], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace ramsey_lab
