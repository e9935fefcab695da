#include "solab/group.h"

#include <algorithm>
#include <stdexcept>

namespace solab {

Bsgs::Bsgs(std::size_t degree, std::span<Permutation const> generators)
  : degree_(degree)
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
    if (g.is_identity())
      continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end())
      continue;
    strong_.push_back(g);
    all_even_ = all_even_ && is_even(g);
  }

  for (auto const &g : strong_) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](Level const &l) { return g[l.base_point] == l.base_point; });
    if (fixes_base)
      add_base_point(g.first_moved_point());
  }

  for (std::size_t i = 0; i < levels_.size(); ++i)
    rebuild_level(i);

  complete();
}

std::vector<Point> Bsgs::base() const
{
  std::vector<Point> result;
  for (auto const &l : levels_)
    result.push_back(l.base_point);
  return result;
}

BigInt Bsgs::order() const
{
  BigInt result = 1;
  for (auto const &l : levels_)
    result *= l.orbit.size();
  return result;
}

std::optional<std::uint64_t> Bsgs::order_u64() const
{
  unsigned __int128 result = 1;
  for (auto const &l : levels_) {
    result *= l.orbit.size();
    if (result > UINT64_MAX)
      return std::nullopt;
  }
  return static_cast<std::uint64_t>(result);
}

Bsgs::SiftResult Bsgs::sift(Permutation g, std::size_t from_level) const
{
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    auto const &l = levels_[i];
    int idx = l.orbit_index[g[l.base_point]];
    if (idx < 0)
      return {std::move(g), i};
    g = g * l.inverse_transversal[idx];
  }
  return {std::move(g), levels_.size()};
}

bool Bsgs::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    throw std::invalid_argument("membership test with degree mismatch");
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

bool Bsgs::extend(Permutation const &g)
{
  if (contains(g))
    return false;

  strong_.push_back(g);
  all_even_ = all_even_ && is_even(g);
  bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                [&](Level const &l) { return g[l.base_point] == l.base_point; });
  if (fixes_base)
    add_base_point(g.first_moved_point());

  for (std::size_t i = 0; i < levels_.size(); ++i)
    rebuild_level(i);

  complete();
  return true;
}

Permutation Bsgs::element(std::span<std::size_t const> digits) const
{
  Permutation result(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;)
    result = result * levels_[i].transversal[digits[i]];
  return result;
}

void Bsgs::add_base_point(Point p)
{
  Level l;
  l.base_point = p;
  levels_.push_back(std::move(l));
}

void Bsgs::rebuild_level(std::size_t i)
{
  auto &l = levels_[i];

  l.generators.clear();
  for (auto const &s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (s[levels_[j].base_point] != levels_[j].base_point) {
        fixes = false;
        break;
      }
    }
    if (fixes)
      l.generators.push_back(s);
  }

  l.orbit.assign(1, l.base_point);
  l.orbit_index.assign(degree_, -1);
  l.orbit_index[l.base_point] = 0;
  l.transversal.assign(1, Permutation(degree_));
  l.inverse_transversal.assign(1, Permutation(degree_));

  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (auto const &s : l.generators) {
      Point y = s[l.orbit[k]];
      if (l.orbit_index[y] >= 0)
        continue;
      l.orbit_index[y] = static_cast<int>(l.orbit.size());
      l.orbit.push_back(y);
      l.transversal.push_back(l.transversal[k] * s);
      l.inverse_transversal.push_back(l.transversal.back().inverse());
    }
  }
}

std::optional<std::size_t> Bsgs::check_level(std::size_t i)
{
  for (std::size_t k = 0; k < levels_[i].orbit.size(); ++k) {
    for (std::size_t s = 0; s < levels_[i].generators.size(); ++s) {
      auto const &l = levels_[i];
      auto const &gen = l.generators[s];
      Point image = gen[l.orbit[k]];
      Permutation schreier =
        l.transversal[k] * gen * l.inverse_transversal[l.orbit_index[image]];
      if (schreier.is_identity())
        continue;

      auto [residue, j] = sift(std::move(schreier), i + 1);
      if (j == levels_.size() && residue.is_identity())
        continue;

      if (j == levels_.size())
        add_base_point(residue.first_moved_point());
      strong_.push_back(std::move(residue));
      for (std::size_t m = i + 1; m <= j; ++m)
        rebuild_level(m);
      return j;
    }
  }
  return std::nullopt;
}

void Bsgs::complete()
{
  // The orbit product never exceeds |G|, and equals it only once every
  // level is a full stabilizer; hitting |Sym(n)| or |Alt(n)| ends the check.
  BigInt ceiling = factorial(static_cast<unsigned>(degree_));
  if (all_even_ && degree_ >= 2)
    ceiling /= 2;
  if (order() == ceiling)
    return;

  std::size_t i = levels_.size();
  while (i-- > 0) {
    if (auto j = check_level(i)) {
      if (order() == ceiling)
        return;
      i = *j + 1;
    }
  }
}

GroupHandle::GroupHandle(std::vector<Permutation> generators)
  : generators_(std::move(generators)), cache_(std::make_shared<Cache>())
{
  if (generators_.empty())
    throw std::invalid_argument("a group needs at least one generator");
  for (auto const &g : generators_) {
    if (g.degree() != generators_.front().degree())
      throw std::invalid_argument("generators of unequal degree");
  }
}

GroupHandle::GroupHandle(std::vector<Permutation> generators, Bsgs prebuilt)
  : GroupHandle(std::move(generators))
{
  std::call_once(cache_->once, [&] { cache_->bsgs = std::move(prebuilt); });
}

GroupHandle GroupHandle::trivial(std::size_t degree)
{
  return GroupHandle({Permutation(degree)});
}

Bsgs const &GroupHandle::bsgs() const
{
  if (!cache_)
    throw std::logic_error("empty GroupHandle");
  std::call_once(cache_->once, [this] { cache_->bsgs = Bsgs(degree(), generators_); });
  return cache_->bsgs;
}

bool GroupHandle::contains(Permutation const &p) const
{
  if (p.degree() != degree())
    throw std::invalid_argument("membership test with degree mismatch");
  return bsgs().contains(p);
}

Permutation GroupHandle::element_at(std::uint64_t index) const
{
  auto const &b = bsgs();
  std::vector<std::size_t> digits(b.depth());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    std::size_t radix = b.levels()[i].orbit.size();
    digits[i] = index % radix;
    index /= radix;
  }
  if (index != 0)
    throw std::out_of_range("element index exceeds group order");
  return b.element(digits);
}

} // namespace solab
