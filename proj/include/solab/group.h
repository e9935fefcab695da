#pragma once

/**
 * @file group.h
 * @brief Permutation groups given by generators, with a lazily built base and
 *        strong generating set (deterministic Schreier-Sims).
 *
 * The base is grown by always choosing the smallest point moved by the
 * permutation that forces a new level, so orders, transversals and sift
 * paths are reproducible.
 */

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "solab/numeric.h"
#include "solab/perm.h"

namespace solab {

class Bsgs {
public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators; // strong generators fixing earlier base points
    std::vector<Point> orbit;            // orbit of base_point, discovery order
    std::vector<int> orbit_index;        // point -> index into orbit, or -1
    std::vector<Permutation> transversal;          // base_point^u = orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level; // first level where sifting stopped (== depth() on success)
  };

  Bsgs() = default;
  Bsgs(std::size_t degree, std::span<Permutation const> generators);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<Point> base() const;
  std::vector<Permutation> const &strong_generators() const { return strong_; }
  std::vector<Level> const &levels() const { return levels_; }

  BigInt order() const;
  /// Order if it fits, otherwise nullopt.
  std::optional<std::uint64_t> order_u64() const;

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  bool contains(Permutation const &g) const;

  /// Adds g and restores the BSGS property. Returns false if g was already
  /// a member (nothing changes).
  bool extend(Permutation const &g);

  /// Element with mixed-radix index digits[i] < levels()[i].orbit.size().
  /// The product runs from the deepest level to level 0.
  Permutation element(std::span<std::size_t const> digits) const;

private:
  void add_base_point(Point p);
  void rebuild_level(std::size_t i);
  std::optional<std::size_t> check_level(std::size_t i);
  void complete();

  std::size_t degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  bool all_even_ = true;
};

/// A group <generators> with a build-once BSGS. Copies share the cache.
class GroupHandle {
public:
  GroupHandle() = default;

  /// Throws std::invalid_argument for an empty list or unequal degrees.
  explicit GroupHandle(std::vector<Permutation> generators);

  /// Adopts a BSGS already built for exactly these generators.
  GroupHandle(std::vector<Permutation> generators, Bsgs prebuilt);

  static GroupHandle trivial(std::size_t degree);

  std::size_t degree() const { return generators_.front().degree(); }
  std::vector<Permutation> const &generators() const { return generators_; }

  Bsgs const &bsgs() const;
  BigInt order() const { return bsgs().order(); }
  bool contains(Permutation const &p) const;
  bool is_trivial() const { return bsgs().depth() == 0; }

  /// Uniform element from independent uniform transversal choices.
  template <typename Rng>
  Permutation random_element(Rng &rng) const;

  /// Element number `index` in the canonical enumeration (0 <= index < order).
  Permutation element_at(std::uint64_t index) const;

private:
  struct Cache {
    std::once_flag once;
    Bsgs bsgs;
  };

  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

template <typename Rng>
Permutation GroupHandle::random_element(Rng &rng) const
{
  auto const &b = bsgs();
  std::vector<std::size_t> digits(b.depth());
  for (std::size_t i = 0; i < digits.size(); ++i)
    digits[i] = std::uniform_int_distribution<std::size_t>(
        0, b.levels()[i].orbit.size() - 1)(rng);
  return b.element(digits);
}

} // namespace solab
