#include "solab/analysis.h"

#include <deque>
#include <stdexcept>

namespace solab {

namespace {

struct Closure {
  std::vector<Permutation> generators;
  Bsgs bsgs;
};

Closure closure_of(std::span<Permutation const> ambient, std::span<Permutation const> seeds,
                   std::size_t degree)
{
  Closure c{{}, Bsgs(degree, {})};
  std::deque<Permutation> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Permutation h = std::move(queue.front());
    queue.pop_front();
    if (h.is_identity() || !c.bsgs.extend(h))
      continue;
    for (auto const &g : ambient)
      queue.push_back(h.conjugate(g));
    c.generators.push_back(std::move(h));
  }
  if (c.generators.empty())
    c.generators.emplace_back(degree);
  return c;
}

Closure derived_closure(std::span<Permutation const> gens, std::size_t degree)
{
  std::vector<Permutation> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      commutators.push_back(commutator(gens[i], gens[j]));
  }
  return closure_of(gens, commutators, degree);
}

} // namespace

GroupHandle normal_closure(std::span<Permutation const> ambient,
                           std::span<Permutation const> seeds)
{
  if (ambient.empty())
    throw std::invalid_argument("normal closure in an empty generator list");
  auto c = closure_of(ambient, seeds, ambient.front().degree());
  return GroupHandle(std::move(c.generators), std::move(c.bsgs));
}

GroupHandle derived_subgroup(GroupHandle const &group)
{
  auto c = derived_closure(group.generators(), group.degree());
  return GroupHandle(std::move(c.generators), std::move(c.bsgs));
}

SolubilityCertificate is_soluble(GroupHandle const &group)
{
  SolubilityCertificate cert{Verdict::soluble, {group.order()}, 0};
  GroupHandle current = group;
  while (cert.derived_orders.back() != 1) {
    GroupHandle next = derived_subgroup(current);
    ++cert.steps;
    cert.derived_orders.push_back(next.order());
    if (cert.derived_orders.back() == cert.derived_orders[cert.derived_orders.size() - 2]) {
      cert.verdict = Verdict::insoluble;
      break;
    }
    current = std::move(next);
  }
  return cert;
}

bool soluble(std::span<Permutation const> generators)
{
  if (generators.empty())
    return true;
  return soluble(generators, Bsgs(generators.front().degree(), generators));
}

bool soluble(std::span<Permutation const> generators, Bsgs const &bsgs)
{
  if (generators.empty())
    return true;

  std::size_t degree = generators.front().degree();
  std::vector<Permutation> current(generators.begin(), generators.end());
  BigInt order = bsgs.order();
  if (degree >= 5 && 2 * order >= factorial(static_cast<unsigned>(degree)))
    return false; // contains Alt(n)

  while (order != 1) {
    auto next = derived_closure(current, degree);
    BigInt next_order = next.bsgs.order();
    if (next_order == order)
      return false;
    order = std::move(next_order);
    current = std::move(next.generators);
  }
  return true;
}

bool contains_alternating(GroupHandle const &group)
{
  return 2 * group.order() >= factorial(static_cast<unsigned>(group.degree()));
}

bool is_transitive(std::span<Permutation const> gens)
{
  return orbits(gens).size() == 1;
}

} // namespace solab
