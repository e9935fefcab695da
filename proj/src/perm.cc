#include "solab/perm.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace solab {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation result(degree);
  for (auto const &cycle : cycles) {
    if (cycle.size() < 2)
      continue;

    std::vector<bool> seen(degree, false);
    for (Point x : cycle) {
      if (x >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(x + 1) +
                                    " exceeds degree " + std::to_string(degree));
      if (seen[x])
        throw std::invalid_argument("repeated point in cycle");
      seen[x] = true;
    }

    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];

    result = compose(result, Permutation(std::move(images)));
  }
  return result;
}

bool Permutation::is_identity() const
{
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Point Permutation::first_moved_point() const
{
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return i;
  }
  return static_cast<Point>(images_.size());
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result.images_.resize(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = i;
  return result;
}

Permutation Permutation::pow(long long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

Permutation Permutation::conjugate(Permutation const &g) const
{
  if (g.degree() != degree())
    throw std::invalid_argument("degree mismatch in conjugation");

  // i^(g^-1 p g) = ((i^g^-1)^p)^g, i.e. j^g maps to (j^p)^g
  Permutation result;
  result.images_.resize(images_.size());
  for (Point j = 0; j < images_.size(); ++j)
    result.images_[g.images_[j]] = g.images_[images_[j]];
  return result;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type(*this))
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " +
                                std::to_string(q.degree()));

  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[i] = q[p[i]];

  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation commutator(Permutation const &p, Permutation const &q)
{
  return p.inverse() * q.inverse() * p * q;
}

Parity parity(Permutation const &p)
{
  std::size_t cycles = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (Point j = i; !seen[j]; j = p[j])
      seen[j] = true;
  }
  return (p.degree() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Point> fixed_points(Permutation const &p)
{
  std::vector<Point> result;
  for (Point i = 0; i < p.degree(); ++i) {
    if (p[i] == i)
      result.push_back(i);
  }
  return result;
}

std::vector<std::vector<Point>> cycle_decomposition(Permutation const &p)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::vector<Point> cycle;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> cycle_type(Permutation const &p)
{
  std::vector<std::size_t> result;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    result.push_back(len);
  }
  std::sort(result.begin(), result.end(), std::greater<>());
  return result;
}

std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens)
{
  if (gens.empty())
    throw std::invalid_argument("orbits of an empty generator list");

  std::size_t n = gens.front().degree();
  for (auto const &g : gens) {
    if (g.degree() != n)
      throw std::invalid_argument("generators of unequal degree");
  }

  std::vector<int> orbit_id(n, -1);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < n; ++start) {
    if (orbit_id[start] >= 0)
      continue;

    int id = static_cast<int>(result.size());
    std::vector<Point> orbit{start};
    orbit_id[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto const &g : gens) {
        Point y = g[orbit[k]];
        if (orbit_id[y] < 0) {
          orbit_id[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::string to_cycle_string(Permutation const &p)
{
  std::ostringstream os;
  bool any = false;
  for (auto const &cycle : cycle_decomposition(p)) {
    if (cycle.size() < 2)
      continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? " " : "") << cycle[i] + 1;
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> *current = nullptr;

  std::size_t i = 0;
  auto fail = [&](std::string const &what) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) +
                                "': " + what);
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (current)
        fail("nested '('");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!current)
        fail("unmatched ')'");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!current)
        fail("point outside a cycle");
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > degree)
          fail("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (value == 0)
        fail("points are 1-indexed");
      current->push_back(static_cast<Point>(value - 1));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (current)
    fail("unterminated cycle");

  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace solab
