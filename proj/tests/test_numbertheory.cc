#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "solab/numbertheory.h"
#include "support.h"

using namespace solab;

namespace {

// phi by counting units, for small m
std::uint64_t phi_by_gcd(std::uint64_t m)
{
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= m; ++i)
    c += std::gcd(i, m) == 1;
  return c;
}

bool is_prime(std::uint64_t m)
{
  if (m < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("totient examples")
{
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(totient(1000003) == 1000002);
  CHECK(totient(1u << 20) == 1u << 19);
  CHECK_THROWS_AS(totient(0), std::invalid_argument);
  for (std::uint64_t m = 1; m <= 300; ++m)
    CHECK(totient(m) == phi_by_gcd(m));
}

TEST_CASE("sieve agrees with factorization up to 1e5")
{
  auto phi = totient_sieve(100000);
  REQUIRE(phi.size() == 100001);
  std::uint64_t mismatches = 0;
  for (std::uint32_t m = 1; m <= 100000; ++m)
    mismatches += phi[m] != totient(m);
  CHECK(mismatches == 0);
}

TEST_CASE("totient is multiplicative on coprime pairs")
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
  int pairs = 0;
  while (pairs < 500) {
    auto a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1)
      continue;
    CHECK(totient(a * b) == totient(a) * totient(b));
    ++pairs;
  }
}

TEST_CASE("totient ratio count")
{
  // tiny threshold: every m in [50, 100] qualifies
  CHECK(totient_ratio_count(100, 0.5, 1e-6) == 51);
  CHECK(totient_ratio_count(101, 0.5, 1e-6) == 101 - 51 + 1);

  std::uint64_t primes = 0;
  for (std::uint64_t m = 50; m <= 100; ++m)
    primes += is_prime(m);
  auto high = totient_ratio_count(100, 0.5, 0.9);
  CHECK(high >= primes);
  // only primes have phi(m)/m >= 0.9 in this range
  CHECK(high == primes);

  // brute force on a mid-sized range
  std::uint64_t brute = 0;
  for (std::uint64_t m = 1500; m <= 5000; ++m)
    brute += 10 * totient(m) >= 3 * m;
  CHECK(totient_ratio_count(5000, 0.3, 0.3) == brute);

  CHECK_THROWS(totient_ratio_count(100, 0, 0.5));
  CHECK_THROWS(totient_ratio_count(100, 0.5, 1));
  CHECK_THROWS(totient_ratio_count(1, 0.5, 0.5));
}

TEST_CASE("ratio count per n is stable between 1e5 and 1e6")
{
  double r5 = double(totient_ratio_count(100000, 0.5, 0.3)) / 1e5;
  double r6 = double(totient_ratio_count(1000000, 0.5, 0.3)) / 1e6;
  CHECK(r5 > 0);
  CHECK(std::abs(r6 - r5) <= 0.1 * r5);
}

TEST_CASE("b_empirical")
{
  CHECK(b_empirical(1, 1000) == 1);
  CHECK(b_empirical(100, 1000000) == 0);
  CHECK_THROWS(b_empirical(0.5, 1000));
  CHECK_THROWS(b_empirical(2, 999));

  // brute force at 2000
  std::uint64_t c = 0;
  for (std::uint64_t m = 1; m <= 2000; ++m)
    c += 2 * totient(m) <= m;
  CHECK(b_empirical(2, 2000) == Rational(c, 2000));

  Rational prev = 2;
  for (double t = 1; t <= 6; t += 0.25) {
    auto b = b_empirical(t, 200000);
    CHECK(b <= prev);
    prev = b;
  }
}

TEST_CASE("asymptotic sanity check near t = 1")
{
  // e^-gamma / log(1/eps) tracks the density of n with n/phi(n) < 1 + eps,
  // i.e. 1 - B(1 + eps). Loose and non-fatal: the statement is asymptotic.
  for (double eps : {0.1, 0.01}) {
    double b = b_empirical(1 + eps, 1000000).convert_to<double>();
    double ref = erdos_asymptotic(eps);
    MESSAGE("eps " << eps << " B " << b << " reference " << ref);
    CHECK(b > 0);
    CHECK(b < 1);
    WARN(1 - b <= 2 * ref);
    WARN(1 - b >= ref / 2);
  }
}
