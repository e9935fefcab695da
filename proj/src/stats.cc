#include "solab/stats.h"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace solab {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index)
{
  SplitMix64 mix(seed ^ (index * 0xd1b54a32d192ed03ull));
  mix();
  return mix() ^ index;
}

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence)
{
  if (trials == 0)
    throw std::invalid_argument("confidence interval over zero trials");
  if (successes > trials)
    throw std::invalid_argument("more successes than trials");
  if (!(confidence > 0 && confidence < 1))
    throw std::invalid_argument("confidence must lie in (0, 1)");

  double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2);
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1 + z2 / n;
  double centre = (p + z2 / (2 * n)) / denom;
  double spread = z / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));

  Estimate e;
  e.estimate = p;
  e.low = std::max(0.0, centre - spread);
  e.high = std::min(1.0, centre + spread);
  e.half_width = (e.high - e.low) / 2;
  e.confidence = confidence;
  e.successes = successes;
  e.trials = trials;
  return e;
}

} // namespace solab
