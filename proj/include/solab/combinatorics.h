#pragma once

/**
 * @file combinatorics.h
 * @brief Exhaustive checks of counting statements about Sym(n): invariant
 *        subsets, projections to a subset R, and long cycles through two
 *        fixed points.
 *
 * Sets of points are 0-indexed. Everything marked exhaustive walks all n!
 * permutations in lexicographic order, so the degree ceilings are small.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solab/numeric.h"
#include "solab/perm.h"
#include "solab/stats.h"

namespace solab {

inline constexpr std::size_t exhaustive_ceiling = 9;

struct IdentityCheck {
  Rational lhs; // sum_{x=0}^{a} (n-x-1)!/(a-x)!
  Rational rhs; // n!/(a!(n-a))
  bool equal;
};

/// Throws std::invalid_argument unless a < n.
IdentityCheck factorial_identity_check(unsigned n, unsigned a);

/// Permutations of {0..omega_size-1} with a nonempty invariant subset of
/// A = {0..a_size-1}, i.e. with some cycle inside A.
struct IotaCount {
  std::uint64_t total = 0;
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  std::size_t omega_size = 0;
  std::size_t a_size = 0;
};

IotaCount iota_count(std::size_t omega_size, std::size_t a_size, unsigned workers = 0);

struct KappaCount {
  std::uint64_t exhaustive = 0;
  BigInt closed_form; // |B|! |Omega-B|! (1 - (|A|-|B|)/(|Omega|-|B|))
};

/// Permutations fixing B setwise with no nonempty invariant subset of A\B.
/// Requires nonempty B <= A <= {0..n-1} and n <= the exhaustive ceiling.
KappaCount kappa_count(std::size_t n, std::span<Point const> a, std::span<Point const> b,
                       unsigned workers = 0);

/// Sends i in r to the first of i map, i map^2, ... that lies in r. The
/// result has the degree of map and fixes every point outside r.
Permutation project_pr_R(Permutation const &map, std::span<Point const> r);

/// Buckets Sym(omega_size) by the projection to r; true iff every one of the
/// |r|! buckets has |Omega|!/|r|! elements. omega_size <= 8.
bool fact1_check(std::size_t omega_size, std::span<Point const> r, unsigned workers = 0);

/// Compares the orbits of <G, sigma> met with r against the orbits of
/// <G, pr_R(sigma)> on r. Every generator of G must fix each point outside r.
bool fact2_check(std::span<Permutation const> g_gens, Permutation const &sigma,
                 std::span<Point const> r);

struct FacileCount {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t exact = 0;
  BigInt closed_form;        // (n-2)! phi(k)
  BigInt printed_form;       // C(n, k-2) (k-2)! phi(k) (n-k)!
  Rational bound;            // n! phi(k) / ((n+2) k)
  bool matches_closed_form = false;
  bool meets_bound = false;
};

/// Counts tau in Sym(n) whose cycle through point 0 has length k and reaches
/// point 1 after d steps with gcd(d, k) = 1. Needs 2 <= k <= n <= 2k and
/// n <= the exhaustive ceiling.
FacileCount facile_count(std::size_t n, std::size_t k, unsigned workers = 0);

/// Membership in the set of tau whose cycle (x_1 = 0, x_2, ..., x_k) has
/// k >= delta1 n, phi(k) >= delta2 k, and x_i = 1 for some i with
/// gcd(i-1, k) = 1. Throws for degree < 2.
bool lambda_member(Permutation const &tau, double delta1, double delta2);

struct LambdaRate {
  std::size_t n = 0;
  Estimate estimate;
  Rational exact;                 // sum over admissible k of phi(k)/(n(n-1))
  std::uint64_t admissible = 0;   // number of k meeting both conditions
  double bound = 0;               // delta2 * admissible / (n + 2)
};

LambdaRate lambda_rate(std::size_t n, double delta1, double delta2, std::uint64_t samples,
                       std::uint64_t seed, double confidence = 0.95, unsigned workers = 0);

struct NontransitivityRate {
  Estimate estimate;              // Monte Carlo over rho Alt(n)
  std::optional<Rational> exact;  // exhaustive over the coset, small n
  std::size_t fixed = 0;          // f = |Fix(G)|
  double reference = 0;           // f/n + 2/(n-f)
  double slack = 0;               // 3/(n-f)
};

/// Probability that <G, sigma> is intransitive for sigma uniform in
/// rho Alt(n). Throws if G is trivial.
NontransitivityRate nontransitivity_rate(std::span<Permutation const> g_gens,
                                         Permutation const &rho, std::uint64_t samples,
                                         std::uint64_t seed, double confidence = 0.95,
                                         unsigned workers = 0);

/// Same probability by walking the whole coset; degree <= 9.
Rational nontransitivity_exact(std::span<Permutation const> g_gens, Permutation const &rho,
                               unsigned workers = 0);

} // namespace solab
