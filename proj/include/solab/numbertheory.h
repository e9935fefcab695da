#pragma once

/**
 * @file numbertheory.h
 * @brief Euler's totient, the density of integers with phi(m) >= delta*m, and
 *        the empirical distribution of n/phi(n).
 */

#include <cstdint>
#include <vector>

#include "solab/numeric.h"

namespace solab {

/// phi(m) by trial-division factorization. Throws for m < 1.
std::uint64_t totient(std::uint64_t m);

/// phi(0..limit) by a linear sieve; entry 0 is 0.
std::vector<std::uint32_t> totient_sieve(std::uint32_t limit);

/// Number of m in [ceil(delta1*n), n] with phi(m) >= delta2*m. The threshold
/// test is exact: phi(m) >= delta2*m is evaluated on the rational value of
/// the double delta2.
std::uint64_t totient_ratio_count(std::uint64_t n, double delta1, double delta2);

/// Fraction of 1 <= m <= limit with m/phi(m) >= t, exactly.
Rational b_empirical(double t, std::uint32_t limit);

/// e^(-gamma)/log(1/eps). Numerically it tracks 1 - B(1+eps), the density
/// of n with n/phi(n) < 1 + eps, as eps -> 0. Throws unless 0 < eps < 1.
double erdos_asymptotic(double eps);

inline constexpr double euler_gamma = 0.5772156649015329;

} // namespace solab
