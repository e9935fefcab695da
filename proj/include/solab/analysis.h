#pragma once

/**
 * @file analysis.h
 * @brief Solubility, transitivity and "contains Alt(n)" predicates.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "solab/group.h"
#include "solab/numeric.h"

namespace solab {

enum class Verdict { soluble, insoluble };

struct SolubilityCertificate {
  Verdict verdict;
  std::vector<BigInt> derived_orders; // |G|, |G'|, |G''|, ...
  std::size_t steps;                  // derivations performed
};

/// Smallest normal subgroup of <ambient> containing `seeds`, with a thinned
/// generating set (only generators that were not yet in the closure).
GroupHandle normal_closure(std::span<Permutation const> ambient,
                           std::span<Permutation const> seeds);

/// [G, G] as the normal closure of the pairwise generator commutators.
GroupHandle derived_subgroup(GroupHandle const &group);

SolubilityCertificate is_soluble(GroupHandle const &group);

/// Same decision as is_soluble without keeping the certificate; used in the
/// hot loops of the enumerations.
bool soluble(std::span<Permutation const> generators);

/// As above, reusing a BSGS already built for `generators`.
bool soluble(std::span<Permutation const> generators, Bsgs const &bsgs);

/// True iff the group contains Alt(n), decided by |G| >= n!/2.
bool contains_alternating(GroupHandle const &group);

bool is_transitive(std::span<Permutation const> gens);

} // namespace solab
