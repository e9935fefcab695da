#include "doctest.h"

#include <numeric>
#include <random>

#include "solab/analysis.h"
#include "solab/constructions.h"
#include "support.h"

using namespace solab;

namespace {

std::vector<std::uint64_t> as_u64(std::vector<BigInt> const &v)
{
  std::vector<std::uint64_t> out;
  for (auto const &x : v)
    out.push_back(x.convert_to<std::uint64_t>());
  return out;
}

} // namespace

TEST_CASE("derived subgroups")
{
  GroupHandle v4({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  CHECK(derived_subgroup(v4).is_trivial());
  CHECK(derived_subgroup(symmetric_group(3)).order() == 3);
  CHECK(derived_subgroup(alternating_group(5)).order() == 60);
  CHECK(derived_subgroup(symmetric_group(6)).order() == 360);
}

TEST_CASE("solubility certificates")
{
  auto s4 = is_soluble(symmetric_group(4));
  CHECK(s4.verdict == Verdict::soluble);
  CHECK(as_u64(s4.derived_orders) == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(s4.steps == 3);

  auto a5 = is_soluble(alternating_group(5));
  CHECK(a5.verdict == Verdict::insoluble);
  CHECK(as_u64(a5.derived_orders) == std::vector<std::uint64_t>{60, 60});

  auto one = is_soluble(GroupHandle::trivial(4));
  CHECK(one.verdict == Verdict::soluble);
  CHECK(as_u64(one.derived_orders) == std::vector<std::uint64_t>{1});
  CHECK(one.steps == 0);
}

TEST_CASE("solubility agrees with the element-set oracle")
{
  std::mt19937_64 rng(99);
  auto all6 = oracle::all_perms(6);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = trial < 40 ? 5 : 6;
    auto const &pool = n == 5 ? oracle::all_perms(5) : all6;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<oracle::Perm> gens{pool[pick(rng)], pool[pick(rng)]};
    std::vector<Permutation> sgens{from_oracle(gens[0]), from_oracle(gens[1])};
    GroupHandle g(sgens);

    auto orders = oracle::derived_orders(oracle::closure(gens, n), n);
    auto cert = is_soluble(g);
    CHECK(as_u64(cert.derived_orders) == std::vector<std::uint64_t>(orders.begin(), orders.end()));
    CHECK((cert.verdict == Verdict::soluble) == (orders.back() == 1));
    CHECK(soluble(sgens) == (orders.back() == 1));
    if (g.order() < 60)
      CHECK(cert.verdict == Verdict::soluble);
    if (contains_alternating(g))
      CHECK(cert.verdict == Verdict::insoluble);

    // conjugation invariance
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::shuffle(images.begin(), images.end(), rng);
    Permutation c(images);
    std::vector<Permutation> conj{sgens[0].conjugate(c), sgens[1].conjugate(c)};
    CHECK(soluble(conj) == soluble(sgens));
  }
}

TEST_CASE("derived subgroup is normal")
{
  std::vector<GroupHandle> groups{symmetric_group(5), symmetric_group(4),
                                  GroupHandle({cyc("(1 2 3)(4 5 6)", 7), cyc("(1 4)(2 7)", 7)})};
  for (auto const &g : groups) {
    auto d = derived_subgroup(g);
    for (auto const &x : g.generators())
      for (auto const &y : d.generators())
        CHECK(d.contains(y.conjugate(x)));
  }
}

TEST_CASE("contains_alternating and transitivity")
{
  CHECK(contains_alternating(GroupHandle({cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)})));
  CHECK_FALSE(contains_alternating(GroupHandle({cyc("(1 2)", 5)})));
  CHECK(contains_alternating(symmetric_group(6)));

  CHECK(is_transitive(std::vector<Permutation>{cyc("(1 2 3 4)", 4)}));
  CHECK_FALSE(is_transitive(std::vector<Permutation>{Permutation(3)}));
  CHECK_FALSE(is_transitive(std::vector<Permutation>{cyc("(1 2)", 4), cyc("(3 4)", 4)}));
  CHECK_THROWS(is_transitive(std::vector<Permutation>{}));
}

TEST_CASE("normal closure")
{
  auto s5 = symmetric_group(5);
  std::vector<Permutation> seed{cyc("(1 2 3)", 5)};
  CHECK(normal_closure(s5.generators(), seed).order() == 60);
  std::vector<Permutation> v{cyc("(1 2)(3 4)", 4)};
  CHECK(normal_closure(symmetric_group(4).generators(), v).order() == 4);
}
