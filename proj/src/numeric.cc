#include "solab/numeric.h"

#include <stdexcept>

namespace solab {

std::string to_fraction_string(Rational const &r)
{
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(std::string const &text)
{
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (std::runtime_error const &) {
    throw std::invalid_argument("not a rational 'p/q': " + text);
  }
}

BigInt factorial(unsigned n)
{
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i)
    result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

} // namespace solab
