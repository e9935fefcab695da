#pragma once

/**
 * @file solubilizer.h
 * @brief Solubilizers S_G(g) = { y : <g, y> soluble } in finite permutation
 *        groups, and the normal-series conditions that bound their density.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "solab/group.h"
#include "solab/numeric.h"
#include "solab/perm.h"

namespace solab {

/// G = N_0 >= N_1 >= ... >= N_t = 1, each N_i normal in the ambient group.
class NormalChain {
public:
  NormalChain() = default;

  /// Validates containment, normality, N_0 = ambient and N_t = 1. Throws
  /// std::invalid_argument naming the first failing step.
  NormalChain(GroupHandle ambient, std::vector<GroupHandle> subgroups);

  GroupHandle const &ambient() const { return ambient_; }
  std::vector<GroupHandle> const &subgroups() const { return subgroups_; }
  std::size_t steps() const { return subgroups_.size() - 1; }

  /// [N_i, N_i] <= N_{i+1}, i.e. the factor N_i/N_{i+1} is abelian.
  bool derived_condition(std::size_t step) const { return derived_[step]; }

  /// [N_i, x] <= N_{i+1}, i.e. x centralizes the factor N_i/N_{i+1}.
  bool centralizer_condition(std::size_t step, Permutation const &x) const;

private:
  GroupHandle ambient_;
  std::vector<GroupHandle> subgroups_;
  std::vector<bool> derived_;
};

struct SolubilizerReport {
  BigInt group_order;
  Permutation g;
  std::uint64_t solubilizer_size = 0;
  Rational ratio;
  std::optional<std::size_t> t_bound_used;
  std::optional<Rational> eta_tilde;
};

struct SolubilizerOptions {
  std::uint64_t ceiling = 10000; // largest |G| enumerated
  bool use_cache = true;
  unsigned workers = 0;
};

/// Counts y in G with <g, y> soluble. The cache reuses a verdict across
/// the set {g^i y^(+-1) g^j}, on which <g, y> is constant.
SolubilizerReport solubilizer_set(GroupHandle const &group, Permutation const &g,
                                  SolubilizerOptions const &options = {});

struct CcentStep {
  bool derived_condition;
  bool centralizer_condition;
};

struct CcentResult {
  bool hypothesis_holds;
  std::optional<std::size_t> failing_step;
  std::vector<CcentStep> steps;
  bool ambient_soluble; // only computed when the hypothesis holds
};

/// Checks that each step satisfies [N_i,N_i] <= N_{i+1} or
/// [N_i,x] <= N_{i+1}; if every step does, also tests the ambient group for
/// solubility. Throws std::invalid_argument unless <x, y> is the ambient
/// group.
CcentResult ccent_check(NormalChain const &chain, Permutation const &x, Permutation const &y);

/// Number of steps whose factor is non-abelian and not centralized by g.
std::size_t t_centralizer_count(NormalChain const &series, Permutation const &g);

struct CrucialResult {
  std::size_t t;
  Rational eta_tilde; // min(eta, 53/90)
  Rational ratio;
  Rational bound;     // (1 - eta_tilde)^t
  bool holds;
  SolubilizerReport solubilizer;
};

/// Compares |S_G(g)|/|G| with (1 - min(eta, 53/90))^t. The caller vouches
/// that the composition factors of the counted factors are eta-insoluble.
CrucialResult crucial_bound_check(NormalChain const &series, Permutation const &g,
                                  Rational const &eta, SolubilizerOptions const &options = {});

} // namespace solab
