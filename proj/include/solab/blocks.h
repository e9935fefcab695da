#pragma once

#include <span>
#include <vector>

#include "solab/group.h"
#include "solab/perm.h"

namespace solab {

/// A partition of {0..n-1} into equal-sized blocks, listed by minimum point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  bool is_trivial() const { return block_size() <= 1 || block_count() <= 1; }

  static BlockSystem from_blocks(std::size_t degree, std::vector<std::vector<Point>> blocks);
};

/// Whether every generator maps every block onto a block.
bool preserves(std::span<Permutation const> gens, BlockSystem const &bs);

/// The finest block system in which all points of `seed` share a block
/// (union-find merge procedure).
BlockSystem minimal_block_containing(std::span<Permutation const> gens,
                                     std::span<Point const> seed);

/// A block system whose blocks are as large as possible while still proper
/// (fewest blocks > 1). Singletons iff the group is primitive. Throws
/// std::invalid_argument for an intransitive group.
BlockSystem minimal_block_system(GroupHandle const &group);

/// The permutations of block indices induced by the generators. Throws
/// std::invalid_argument if some generator does not preserve the system.
std::vector<Permutation> blocks_action(GroupHandle const &group, BlockSystem const &bs);

} // namespace solab
