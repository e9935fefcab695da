#pragma once

/**
 * @file constructions.h
 * @brief Standard groups and the named group recipes used by the CLI.
 *
 * Recipes: "alt<n>", "sym<n>", "alt<n>^<m>:swap" (Alt(n)^m extended by the
 * swap of the first two factors) and "alt<n>wrC<m>" (Alt(n) wr C_m). Each
 * recipe comes with a normal series; chief series are never discovered.
 */

#include <map>
#include <string>
#include <vector>

#include "solab/group.h"
#include "solab/numeric.h"
#include "solab/solubilizer.h"

namespace solab {

GroupHandle symmetric_group(std::size_t n);
GroupHandle alternating_group(std::size_t n);

/// Integer partitions of n, each non-increasing, in reverse lexicographic
/// order starting with (n).
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

/// Element of Sym(n) with the given cycle type: consecutive cycles
/// (0 .. l1-1)(l1 .. l1+l2-1)...
Permutation class_representative(std::vector<std::size_t> const &partition, std::size_t n);

/// Size of the Sym(n)-conjugacy class with this cycle type.
BigInt class_size(std::vector<std::size_t> const &partition, std::size_t n);

/// p acting on block `block` of `blocks` consecutive blocks of size p.degree().
Permutation embed_in_block(Permutation const &p, std::size_t block, std::size_t blocks);

/// Permutation of blocks of size `block_size` induced by `top`.
Permutation block_permutation(Permutation const &top, std::size_t block_size);

/// G x H acting on the disjoint union of the two domains.
GroupHandle direct_product(GroupHandle const &g, GroupHandle const &h);

struct Construction {
  std::string name;
  GroupHandle group;
  NormalChain series;
  std::map<std::string, Permutation> elements; // named elements such as "swap"
};

/// Throws std::invalid_argument with a usage hint for an unknown recipe.
Construction make_construction(std::string const &recipe);

/// Derived series of a soluble group as a normal chain. Throws for an
/// insoluble group.
NormalChain derived_series_chain(GroupHandle const &group);

} // namespace solab
