#include "solab/blocks.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace solab {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

BlockSystem BlockSystem::from_blocks(std::size_t degree, std::vector<std::vector<Point>> blocks)
{
  for (auto &b : blocks)
    std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());

  BlockSystem bs;
  bs.block_of.assign(degree, degree);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Point p : blocks[i]) {
      if (p >= degree || bs.block_of[p] != degree)
        throw std::invalid_argument("blocks do not partition the points");
      bs.block_of[p] = i;
    }
  }
  if (std::count(bs.block_of.begin(), bs.block_of.end(), degree) != 0)
    throw std::invalid_argument("blocks do not cover the points");
  bs.blocks = std::move(blocks);
  return bs;
}

bool preserves(std::span<Permutation const> gens, BlockSystem const &bs)
{
  for (auto const &g : gens) {
    for (auto const &block : bs.blocks) {
      std::size_t target = bs.block_of[g[block.front()]];
      for (Point p : block) {
        if (bs.block_of[g[p]] != target)
          return false;
      }
    }
  }
  return true;
}

BlockSystem minimal_block_containing(std::span<Permutation const> gens,
                                     std::span<Point const> seed)
{
  std::size_t n = gens.front().degree();
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> queue;

  for (std::size_t i = 1; i < seed.size(); ++i) {
    if (uf.unite(seed[0], seed[i]))
      queue.emplace_back(seed[0], seed[i]);
  }

  // every merge records one edge; the images of all edges must be merged too
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      if (uf.unite(g[a], g[b]))
        queue.emplace_back(g[a], g[b]);
    }
  }

  std::vector<std::vector<Point>> blocks;
  std::vector<int> index(n, -1);
  for (Point p = 0; p < n; ++p) {
    std::size_t root = uf.find(p);
    if (index[root] < 0) {
      index[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[root]].push_back(p);
  }
  return BlockSystem::from_blocks(n, std::move(blocks));
}

BlockSystem minimal_block_system(GroupHandle const &group)
{
  auto const &gens = group.generators();
  std::size_t n = group.degree();
  if (orbits(gens).size() != 1)
    throw std::invalid_argument("minimal_block_system needs a transitive group");

  std::vector<std::vector<Point>> singletons(n);
  for (Point p = 0; p < n; ++p)
    singletons[p] = {p};
  BlockSystem best = BlockSystem::from_blocks(n, std::move(singletons));
  if (n <= 2)
    return best;

  // Walk the lattice of blocks containing 0: each step joins a block with one
  // more point. A maximal block is one whose every such join is everything.
  std::set<std::vector<Point>> seen;
  std::deque<std::vector<Point>> frontier{{0}};
  seen.insert({0});

  while (!frontier.empty()) {
    auto block = std::move(frontier.front());
    frontier.pop_front();

    std::vector<bool> in_block(n, false);
    for (Point p : block)
      in_block[p] = true;

    for (Point j = 1; j < n; ++j) {
      if (in_block[j])
        continue;
      auto seed = block;
      seed.push_back(j);
      auto bs = minimal_block_containing(gens, seed);
      if (bs.block_count() == 1)
        continue;
      auto const &candidate = bs.blocks[bs.block_of[0]];
      if (!seen.insert(candidate).second)
        continue;
      if (bs.block_size() > best.block_size())
        best = bs;
      frontier.push_back(candidate);
    }
  }
  return best;
}

std::vector<Permutation> blocks_action(GroupHandle const &group, BlockSystem const &bs)
{
  std::vector<Permutation> result;
  for (auto const &g : group.generators()) {
    std::vector<Point> images(bs.block_count());
    for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
      auto const &block = bs.blocks[b];
      std::size_t target = bs.block_of[g[block.front()]];
      for (Point p : block) {
        if (bs.block_of[g[p]] != target)
          throw std::invalid_argument("generator " + to_cycle_string(g) +
                                      " does not preserve the block system");
      }
      images[b] = static_cast<Point>(target);
    }
    result.emplace_back(std::move(images));
  }
  return result;
}

} // namespace solab
