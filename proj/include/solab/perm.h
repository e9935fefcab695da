#pragma once

/**
 * @file perm.h
 * @brief Permutations of {0, ..., n-1} under the right action.
 *
 * Points are written on the left of the permutation (i^p), so the product
 * p * q means "apply p, then q". Every other module uses this convention.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace solab {

using Point = std::uint32_t;

class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Product of the given cycles, applied left to right. Points are 0-based.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;

  /// Smallest point moved, or degree() for the identity.
  Point first_moved_point() const;

  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// g^-1 * this * g, i.e. the image of this under relabelling by g.
  Permutation conjugate(Permutation const &g) const;

  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const;

  bool operator==(Permutation const &) const = default;
  std::strong_ordering operator<=>(Permutation const &) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(Permutation const &p, Permutation const &q);

  std::vector<Point> images_;
};

/// Left-to-right product: i maps to q(p(i)). Throws on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
inline Permutation operator*(Permutation const &p, Permutation const &q)
{ return compose(p, q); }

inline Permutation invert(Permutation const &p) { return p.inverse(); }

/// p^-1 q^-1 p q
Permutation commutator(Permutation const &p, Permutation const &q);

enum class Parity { even, odd };

Parity parity(Permutation const &p);
inline bool is_even(Permutation const &p) { return parity(p) == Parity::even; }

std::vector<Point> fixed_points(Permutation const &p);

/// Cycles including fixed points, each starting at its minimum, sorted by
/// that minimum.
std::vector<std::vector<Point>> cycle_decomposition(Permutation const &p);

/// Cycle lengths in non-increasing order (a partition of the degree).
std::vector<std::size_t> cycle_type(Permutation const &p);

/// Orbits of <gens>, each sorted, listed by minimum. Throws on an empty list
/// or unequal degrees.
std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens);

/// Cycle notation with 1-indexed points, e.g. "(1 2)(3 4 5)"; "()" for the
/// identity.
std::string to_cycle_string(Permutation const &p);

/// Parses 1-indexed cycle notation. Cycles are multiplied left to right.
/// Whitespace and commas separate points. Throws std::invalid_argument.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace solab
