#include "solab/numbertheory.h"

#include <cmath>
#include <stdexcept>

namespace solab {

namespace {

Rational exact(double x)
{
  // Doubles are dyadic rationals, so this conversion is exact.
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  if (exponent >= 0)
    return r * BigInt(BigInt(1) << exponent);
  return r / BigInt(BigInt(1) << -exponent);
}

// q*a >= p*b for a rational p/q and machine-size a, b.
class RatioTest {
public:
  explicit RatioTest(Rational const &r) : p_(numerator(r)), q_(denominator(r))
  {
    small_ = msb(p_) < 62 && msb(q_) < 62;
    if (small_) {
      ps_ = p_.convert_to<std::int64_t>();
      qs_ = q_.convert_to<std::int64_t>();
    }
  }

  bool operator()(std::uint64_t a, std::uint64_t b) const
  {
    if (small_)
      return static_cast<__int128>(qs_) * a >= static_cast<__int128>(ps_) * b;
    return q_ * a >= p_ * b;
  }

private:
  static unsigned msb(BigInt const &x) { return x == 0 ? 0 : boost::multiprecision::msb(x); }

  BigInt p_, q_;
  bool small_ = false;
  std::int64_t ps_ = 0, qs_ = 0;
};

void check_unit(double x, char const *name)
{
  if (!(x > 0 && x < 1))
    throw std::invalid_argument(std::string(name) + " must lie strictly between 0 and 1");
}

} // namespace

std::uint64_t totient(std::uint64_t m)
{
  if (m < 1)
    throw std::invalid_argument("totient needs m >= 1");
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p)
      continue;
    while (m % p == 0)
      m /= p;
    result -= result / p;
  }
  if (m > 1)
    result -= result / m;
  return result;
}

std::vector<std::uint32_t> totient_sieve(std::uint32_t limit)
{
  std::vector<std::uint32_t> phi(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  if (limit >= 1)
    phi[1] = 1;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (phi[i] == 0) {
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      std::uint64_t ip = std::uint64_t(i) * p;
      if (ip > limit)
        break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return phi;
}

std::uint64_t totient_ratio_count(std::uint64_t n, double delta1, double delta2)
{
  check_unit(delta1, "delta1");
  check_unit(delta2, "delta2");
  if (n < 2)
    throw std::invalid_argument("totient_ratio_count needs n >= 2");
  if (n > 0xffffffffull)
    throw std::invalid_argument("n exceeds the sieve range");

  Rational d1 = exact(delta1);
  Rational d2 = exact(delta2);
  Rational start = d1 * n;
  BigInt lo_big = numerator(start) / denominator(start);
  if (lo_big < start)
    ++lo_big;
  auto lo = std::max<std::uint64_t>(1, lo_big.convert_to<std::uint64_t>());

  auto phi = totient_sieve(static_cast<std::uint32_t>(n));
  // phi(m) >= (p/q) m  <=>  q phi(m) >= p m
  RatioTest at_least(d2);
  std::uint64_t count = 0;
  for (std::uint64_t m = lo; m <= n; ++m) {
    if (at_least(phi[m], m))
      ++count;
  }
  return count;
}

Rational b_empirical(double t, std::uint32_t limit)
{
  if (!(t >= 1))
    throw std::invalid_argument("b_empirical needs t >= 1 (B(t) = 1 for t <= 1)");
  if (limit < 1000)
    throw std::invalid_argument("b_empirical needs limit >= 1000");

  RatioTest at_least(exact(t));
  auto phi = totient_sieve(limit);
  std::uint64_t count = 0;
  // m / phi(m) >= p/q  <=>  q m >= p phi(m)
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (at_least(m, phi[m]))
      ++count;
  }
  return Rational(count, limit);
}

double erdos_asymptotic(double eps)
{
  check_unit(eps, "eps");
  return std::exp(-euler_gamma) / std::log(1 / eps);
}

} // namespace solab
