#include "solab/constructions.h"

#include <map>
#include <regex>
#include <stdexcept>

#include "solab/analysis.h"

namespace solab {

namespace {

Permutation cycle_on(std::size_t n, Point first, Point last)
{
  std::vector<Point> cycle;
  for (Point p = first; p <= last; ++p)
    cycle.push_back(p);
  return Permutation::from_cycles(n, {cycle});
}

void partitions_into(std::size_t remaining, std::size_t max_part, std::vector<std::size_t> &prefix,
                     std::vector<std::vector<std::size_t>> &out)
{
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Permutation> alternating_generators(std::size_t n)
{
  if (n < 3)
    return {Permutation(n)};
  if (n == 3)
    return {cycle_on(3, 0, 2)};
  Permutation long_cycle = n % 2 ? cycle_on(n, 0, static_cast<Point>(n - 1))
                                 : cycle_on(n, 1, static_cast<Point>(n - 1));
  return {cycle_on(n, 0, 2), long_cycle};
}

GroupHandle blocks_subgroup(std::vector<Permutation> const &gens, std::size_t first_block,
                            std::size_t blocks)
{
  std::vector<Permutation> result;
  for (std::size_t b = first_block; b < blocks; ++b) {
    for (auto const &g : gens)
      result.push_back(embed_in_block(g, b, blocks));
  }
  if (result.empty())
    result.emplace_back(gens.front().degree() * blocks);
  return GroupHandle(std::move(result));
}

std::vector<GroupHandle> standard_series(std::size_t n, GroupHandle const &group, bool symmetric)
{
  if (n < 5)
    return derived_series_chain(group).subgroups();
  std::vector<GroupHandle> series{group};
  if (symmetric)
    series.push_back(alternating_group(n));
  series.push_back(GroupHandle::trivial(n));
  return series;
}

} // namespace

GroupHandle symmetric_group(std::size_t n)
{
  if (n < 2)
    return GroupHandle::trivial(n);
  return GroupHandle({Permutation::from_cycles(n, {{0, 1}}),
                      cycle_on(n, 0, static_cast<Point>(n - 1))});
}

GroupHandle alternating_group(std::size_t n)
{
  return GroupHandle(alternating_generators(n));
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

Permutation class_representative(std::vector<std::size_t> const &partition, std::size_t n)
{
  std::vector<std::vector<Point>> cycles;
  Point next = 0;
  for (std::size_t len : partition) {
    std::vector<Point> cycle;
    for (std::size_t i = 0; i < len; ++i)
      cycle.push_back(next++);
    cycles.push_back(std::move(cycle));
  }
  if (next != n)
    throw std::invalid_argument("partition does not sum to n");
  return Permutation::from_cycles(n, cycles);
}

BigInt class_size(std::vector<std::size_t> const &partition, std::size_t n)
{
  std::map<std::size_t, unsigned> multiplicity;
  for (std::size_t len : partition)
    ++multiplicity[len];
  BigInt centralizer = 1;
  for (auto [len, m] : multiplicity) {
    for (unsigned i = 0; i < m; ++i)
      centralizer *= len;
    centralizer *= factorial(m);
  }
  return factorial(static_cast<unsigned>(n)) / centralizer;
}

Permutation embed_in_block(Permutation const &p, std::size_t block, std::size_t blocks)
{
  std::size_t d = p.degree();
  std::vector<Point> images(d * blocks);
  for (Point x = 0; x < images.size(); ++x)
    images[x] = x;
  for (Point x = 0; x < d; ++x)
    images[block * d + x] = static_cast<Point>(block * d + p[x]);
  return Permutation(std::move(images));
}

Permutation block_permutation(Permutation const &top, std::size_t block_size)
{
  std::vector<Point> images(top.degree() * block_size);
  for (Point b = 0; b < top.degree(); ++b) {
    for (Point x = 0; x < block_size; ++x)
      images[b * block_size + x] = static_cast<Point>(top[b] * block_size + x);
  }
  return Permutation(std::move(images));
}

GroupHandle direct_product(GroupHandle const &g, GroupHandle const &h)
{
  std::size_t dg = g.degree();
  std::size_t n = dg + h.degree();
  std::vector<Permutation> gens;
  for (auto const &x : g.generators()) {
    std::vector<Point> images(n);
    for (Point p = 0; p < n; ++p)
      images[p] = p < dg ? x[p] : p;
    gens.emplace_back(std::move(images));
  }
  for (auto const &x : h.generators()) {
    std::vector<Point> images(n);
    for (Point p = 0; p < n; ++p)
      images[p] = p < dg ? p : static_cast<Point>(dg + x[p - dg]);
    gens.emplace_back(std::move(images));
  }
  return GroupHandle(std::move(gens));
}

NormalChain derived_series_chain(GroupHandle const &group)
{
  std::vector<GroupHandle> chain{group};
  while (!chain.back().is_trivial()) {
    GroupHandle next = derived_subgroup(chain.back());
    if (next.order() == chain.back().order())
      throw std::invalid_argument("derived series of an insoluble group does not reach 1");
    chain.push_back(std::move(next));
  }
  return NormalChain(group, std::move(chain));
}

Construction make_construction(std::string const &recipe)
{
  static std::regex const simple(R"((alt|sym)(\d+))");
  static std::regex const power(R"(alt(\d+)\^(\d+):swap)");
  static std::regex const wreath(R"(alt(\d+)wrC(\d+))");
  std::smatch m;

  auto number = [](std::string const &s, std::size_t lo, std::size_t hi, char const *what) {
    std::size_t v = std::stoul(s);
    if (v < lo || v > hi)
      throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
    return v;
  };

  Construction c;
  c.name = recipe;

  if (std::regex_match(recipe, m, simple)) {
    std::size_t n = number(m[2], 2, 64, "n");
    bool symmetric = m[1] == "sym";
    c.group = symmetric ? symmetric_group(n) : alternating_group(n);
    c.series = NormalChain(c.group, standard_series(n, c.group, symmetric));
    return c;
  }

  if (std::regex_match(recipe, m, power)) {
    std::size_t n = number(m[1], 5, 16, "n");
    std::size_t k = number(m[2], 2, 8, "m");
    auto alt = alternating_generators(n);
    Permutation swap = block_permutation(Permutation::from_cycles(k, {{0, 1}}), n);

    auto base = blocks_subgroup(alt, 0, k);
    auto gens = base.generators();
    gens.push_back(swap);
    c.group = GroupHandle(gens);

    // G > Alt^m > Alt^(blocks 2..m-1) > ... > 1; the first factor is the
    // swapped pair, each later one a single block.
    std::vector<GroupHandle> series{c.group, base};
    for (std::size_t first = 2; first < k; ++first)
      series.push_back(blocks_subgroup(alt, first, k));
    series.push_back(GroupHandle::trivial(n * k));
    c.series = NormalChain(c.group, std::move(series));
    c.elements.emplace("swap", swap);
    return c;
  }

  if (std::regex_match(recipe, m, wreath)) {
    std::size_t n = number(m[1], 5, 16, "n");
    std::size_t k = number(m[2], 2, 8, "m");
    auto alt = alternating_generators(n);
    Permutation shift = block_permutation(cycle_on(k, 0, static_cast<Point>(k - 1)), n);

    std::vector<Permutation> gens;
    for (auto const &g : alt)
      gens.push_back(embed_in_block(g, 0, k));
    gens.push_back(shift);
    c.group = GroupHandle(gens);
    c.series = NormalChain(c.group, {c.group, blocks_subgroup(alt, 0, k),
                                     GroupHandle::trivial(n * k)});
    c.elements.emplace("shift", shift);
    return c;
  }

  throw std::invalid_argument("unknown group recipe '" + recipe +
                              "'; expected alt<n>, sym<n>, alt<n>^<m>:swap or alt<n>wrC<m>");
}

} // namespace solab
