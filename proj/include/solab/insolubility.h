#pragma once

/**
 * @file insolubility.h
 * @brief Insolubility probabilities P_ins(N, a, b) and Q(S, a, b).
 *
 * For a coset bS of the socle S inside the ambient group, P_ins counts the
 * s in S such that <a, bs> is insoluble and Q counts those with <a, bs>
 * containing S. Only the coset bS matters, so a CosetSpec carries a
 * representative. Aut(Alt(n)) is modelled by Sym(n) acting by conjugation;
 * for n = 6 this misses the exceptional outer automorphisms and reports are
 * flagged accordingly.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solab/group.h"
#include "solab/numeric.h"
#include "solab/perm.h"
#include "solab/stats.h"

namespace solab {

class CosetSpec {
public:
  /// Throws std::invalid_argument unless socle <= ambient and rep is in ambient.
  CosetSpec(GroupHandle ambient, GroupHandle socle, Permutation rep);

  /// Sym(n) > Alt(n) with rep () for the even coset and (1 2) for the odd one.
  static CosetSpec alternating(std::size_t n, Parity coset);

  GroupHandle const &ambient() const { return ambient_; }
  GroupHandle const &socle() const { return socle_; }
  Permutation const &rep() const { return rep_; }
  std::size_t degree() const { return rep_.degree(); }

  /// Socle is Alt(n) on the natural n points, so Q is defined.
  bool socle_is_alternating() const { return socle_is_alt_; }

private:
  GroupHandle ambient_;
  GroupHandle socle_;
  Permutation rep_;
  bool socle_is_alt_ = false;
};

enum class ReportKind { exact, montecarlo };

struct InsolubilityReport {
  ReportKind kind = ReportKind::exact;

  // exact mode
  std::uint64_t population = 0; // |S|
  std::uint64_t count_insoluble = 0;
  std::uint64_t count_contains_socle = 0;
  Rational p_ins;
  std::optional<Rational> q_value;

  // Monte Carlo mode
  Estimate p_ins_estimate;
  std::optional<Estimate> q_estimate;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// Up to three s with <a, bs> insoluble, in enumeration (or sample) order.
  std::vector<Permutation> witnesses;
  std::vector<std::string> flags;
};

struct ExactOptions {
  std::uint64_t ceiling = 500000; // largest |S| scanned exhaustively
  unsigned workers = 0;           // 0: default_workers()
};

struct SamplingOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  unsigned workers = 0;
};

InsolubilityReport pins_exact(Permutation const &a, CosetSpec const &coset,
                              ExactOptions const &options = {});

InsolubilityReport pins_montecarlo(Permutation const &a, CosetSpec const &coset,
                                   SamplingOptions const &options);

struct EtaEntry {
  std::vector<std::size_t> cycle_type;
  Permutation a;
  Parity coset;
  Rational p_ins;
  Rational q_value;
};

struct EtaResult {
  std::size_t n = 0;
  Rational eta;                      // min of p_ins over the table
  std::vector<EtaEntry> table;       // one row per (class of a, coset)
  std::vector<std::size_t> argmin;   // rows attaining eta
  std::vector<std::string> flags;
};

/// Minimum of P_ins(Alt(n), a, b) over a != 1 (up to conjugacy) and the two
/// cosets of Alt(n) in Sym(n). n must lie in [5, max_n].
EtaResult eta_exact(std::size_t n, ExactOptions const &options = {}, std::size_t max_n = 8);

/// Exact probability over (s1, s2) in Alt(n)^2 that <s1 x1, s2 x2> contains
/// Alt(n), for 5 <= n <= 7.
Rational two_coset_generation_check(Permutation const &x1, Permutation const &x2,
                                    std::size_t n, unsigned workers = 0);

} // namespace solab
