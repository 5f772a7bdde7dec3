#include "modcount/random.hpp"

#include <cstdio>

namespace modcount {

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
  std::uint64_t x = seed;
  for (auto& word : s_) {
    x += kGoldenGamma;
    word = splitmix64_mix(x);
  }
}

Xoshiro256StarStar Xoshiro256StarStar::for_trial(const SeedSpec& seed) noexcept {
  std::uint64_t key = splitmix64_mix(seed.master_seed) ^ splitmix64_mix((seed.trial_index + 1) * kGoldenGamma);
  return Xoshiro256StarStar(splitmix64_mix(key));
}

namespace {

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llX", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

SamplerMetadata sampler_metadata(std::uint64_t master_seed) {
  return {
      "xoshiro256**-1.0",
      "state = splitmix64 stream from mix(mix(master) ^ mix((trial+1)*gamma)); "
      "uniform = (x >> 11) * 2^-53; edge iff uniform < p; pairs in lexicographic order",
      {{"splitmix64_gamma", hex(kGoldenGamma)},
       {"splitmix64_mul1", hex(0xBF58476D1CE4E5B9ULL)},
       {"splitmix64_mul2", hex(0x94D049BB133111EBULL)},
       {"xoshiro_rotations", "7,17,45"},
       {"xoshiro_multipliers", "5,9"}},
      master_seed,
  };
}

}  // namespace modcount
