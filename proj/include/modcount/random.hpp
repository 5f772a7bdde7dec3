#ifndef MODCOUNT_RANDOM_HPP
#define MODCOUNT_RANDOM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace modcount {

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// xoshiro256** 1.0 (Blackman, Vigna). State seeded from a SplitMix64 stream.
class Xoshiro256StarStar {
public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;

  /// Per-trial generator: a pure function of (master_seed, trial_index), so
  /// trial streams never depend on scheduling.
  static Xoshiro256StarStar for_trial(const SeedSpec& seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0,1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// True with probability p (one draw, even when p is 0 or 1).
  bool bernoulli(double p) noexcept { return uniform() < p; }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> s_{};
};

/// Generator identity and constants, embedded in every result file.
struct SamplerMetadata {
  std::string generator;
  std::string seeding;
  std::vector<std::pair<std::string, std::string>> constants;
  std::uint64_t master_seed = 0;
};

SamplerMetadata sampler_metadata(std::uint64_t master_seed);

}  // namespace modcount

#endif
