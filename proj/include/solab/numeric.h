#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace solab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; integers print as "p/1" so the shape is uniform.
std::string to_fraction_string(Rational const &r);
Rational parse_fraction(std::string const &text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline double to_double(Rational const &r) { return r.convert_to<double>(); }

} // namespace solab
