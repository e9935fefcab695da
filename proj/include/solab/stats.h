#pragma once

#include <cstdint>
#include <limits>

namespace solab {

/// SplitMix64, used as a per-sample generator so that sample i depends only
/// on (seed, i).
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()()
  {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Seed of the independent stream for sample `index` of a run seeded `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Proportion estimate with a Wilson score interval.
struct Estimate {
  double estimate = 0;   // successes / trials
  double half_width = 0; // (high - low) / 2
  double low = 0;
  double high = 0;
  double confidence = 0.95;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence);

} // namespace solab
