#include "doctest.h"

#include "solab/analysis.h"
#include "solab/constructions.h"
#include "solab/insolubility.h"
#include "solab/solubilizer.h"
#include "support.h"

using namespace solab;

namespace {

SolubilizerOptions uncached() { return {10000, false, 1}; }
SolubilizerOptions cached() { return {10000, true, 1}; }

std::vector<bool> membership(GroupHandle const &group, Permutation const &g)
{
  std::vector<bool> in;
  for (std::uint64_t i = 0; i < *group.bsgs().order_u64(); ++i) {
    std::vector<Permutation> gens{g, group.element_at(i)};
    in.push_back(soluble(gens));
  }
  return in;
}

} // namespace

TEST_CASE("solubilizer of a soluble group is everything")
{
  auto s4 = symmetric_group(4);
  for (auto g : {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4), Permutation(4)}) {
    auto r = solubilizer_set(s4, g, cached());
    CHECK(r.ratio == 1);
    CHECK(r.solubilizer_size == 24);
  }
  CHECK(solubilizer_set(alternating_group(5), Permutation(5), cached()).ratio == 1);
}

TEST_CASE("Alt(5) solubilizer of a 5-cycle matches the naive oracle")
{
  oracle::SolubilityMemo memo(5);
  auto g = cyc("(1 2 3 4 5)", 5);
  std::uint64_t naive = 0;
  for (auto const &y : oracle::all_perms(5))
    if (oracle::is_even(y))
      naive += memo({to_oracle(g), y}).soluble;
  auto r = solubilizer_set(alternating_group(5), g, uncached());
  CHECK(r.solubilizer_size == naive);
  CHECK(r.ratio == Rational(naive, 60));
  CHECK(solubilizer_set(alternating_group(5), g, cached()).solubilizer_size == naive);
}

TEST_CASE("cached and uncached scans agree")
{
  std::vector<std::pair<GroupHandle, std::vector<Permutation>>> cases{
    {alternating_group(5), {cyc("(1 2 3)", 5), cyc("(1 2)(3 4)", 5), cyc("(1 2 3 4 5)", 5)}},
    {symmetric_group(5), {cyc("(1 2)", 5), cyc("(1 2 3 4)", 5), cyc("(1 2 3)(4 5)", 5)}},
    {alternating_group(6), {cyc("(1 2 3)", 6), cyc("(1 2 3 4)(5 6)", 6), cyc("(1 2 3 4 5)", 6)}},
  };
  for (auto const &[group, elements] : cases) {
    for (auto const &g : elements) {
      auto a = solubilizer_set(group, g, cached());
      auto b = solubilizer_set(group, g, uncached());
      CHECK(a.solubilizer_size == b.solubilizer_size);
      CHECK(a.solubilizer_size > 0);
      auto c = solubilizer_set(group, g, {10000, true, 3});
      CHECK(c.solubilizer_size == a.solubilizer_size);
    }
  }
}

TEST_CASE("solubilizers grow under powers")
{
  for (auto const &group : {alternating_group(5), symmetric_group(5)}) {
    for (auto g : {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)(4 5)", 5), cyc("(1 2 3 4)", 5)}) {
      if (!group.contains(g))
        continue;
      auto base = membership(group, g);
      for (long long r = 2; r <= static_cast<long long>(g.order()); ++r) {
        auto power = membership(group, g.pow(r));
        for (std::size_t i = 0; i < base.size(); ++i)
          if (base[i])
            CHECK(power[i]);
      }
    }
  }
}

TEST_CASE("elements of a soluble direct factor solubilize everything")
{
  auto g = direct_product(alternating_group(5), symmetric_group(3));
  auto x = Permutation::from_cycles(8, {{5, 6, 7}});
  auto r = solubilizer_set(g, x, cached());
  CHECK(r.group_order == 360);
  CHECK(r.ratio == 1);
}

TEST_CASE("solubilizer argument checks")
{
  CHECK_THROWS_AS(solubilizer_set(alternating_group(5), cyc("(1 2)", 5)), std::invalid_argument);
  CHECK_THROWS_AS(solubilizer_set(alternating_group(8), cyc("(1 2 3)", 8)),
                  std::invalid_argument);
}

TEST_CASE("normal chain validation")
{
  auto s4 = symmetric_group(4);
  GroupHandle v4({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  GroupHandle c2({cyc("(1 2)(3 4)", 4)});
  auto one = GroupHandle::trivial(4);
  CHECK_NOTHROW(NormalChain(s4, {s4, alternating_group(4), v4, one}));
  CHECK_THROWS_AS(NormalChain(s4, {s4, v4, c2, one}), std::invalid_argument);
  CHECK_THROWS_AS(NormalChain(s4, {s4, alternating_group(4)}), std::invalid_argument);
  CHECK_THROWS_AS(NormalChain(s4, {alternating_group(4), one}), std::invalid_argument);
  CHECK_THROWS_AS(NormalChain(s4, {s4, v4, alternating_group(4), one}), std::invalid_argument);
}

TEST_CASE("chain criterion")
{
  auto s4 = symmetric_group(4);
  GroupHandle v4({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  NormalChain chain(s4, {s4, alternating_group(4), v4, GroupHandle::trivial(4)});
  auto ok = ccent_check(chain, cyc("(1 2)", 4), cyc("(1 2 3 4)", 4));
  CHECK(ok.hypothesis_holds);
  CHECK(ok.ambient_soluble);
  for (auto const &s : ok.steps)
    CHECK(s.derived_condition);

  auto a5 = alternating_group(5);
  NormalChain simple(a5, {a5, GroupHandle::trivial(5)});
  auto x = cyc("(1 2 3)", 5);
  auto y = cyc("(1 2 3 4 5)", 5);
  auto bad = ccent_check(simple, x, y);
  CHECK_FALSE(bad.hypothesis_holds);
  REQUIRE(bad.failing_step);
  CHECK(*bad.failing_step == 0);
  CHECK_FALSE(bad.steps[0].derived_condition);
  CHECK_FALSE(bad.steps[0].centralizer_condition);

  GroupHandle c5({y});
  NormalChain cyclic(c5, {c5, GroupHandle::trivial(5)});
  auto degenerate = ccent_check(cyclic, Permutation(5), y);
  CHECK(degenerate.hypothesis_holds);
  CHECK(degenerate.ambient_soluble);
  CHECK(degenerate.steps[0].centralizer_condition);

  CHECK_THROWS_AS(ccent_check(simple, x, cyc("(1 2 3)", 5)), std::invalid_argument);
}

TEST_CASE("chain criterion with the identity as x is the cyclic case")
{
  // x = 1 centralizes every factor, so the criterion must report solubility.
  for (auto y : {cyc("(1 2 3 4 5 6)", 6), cyc("(1 2)(3 4 5)", 6)}) {
    GroupHandle c({y});
    auto chain = NormalChain(c, {c, GroupHandle::trivial(6)});
    auto r = ccent_check(chain, Permutation(6), y);
    CHECK(r.hypothesis_holds);
    CHECK(r.ambient_soluble);
  }
}

TEST_CASE("t-centralizer counts")
{
  auto sw = make_construction("alt5^2:swap");
  CHECK(t_centralizer_count(sw.series, Permutation(10)) == 0);
  CHECK(t_centralizer_count(sw.series, sw.elements.at("swap")) == 1);

  auto s4 = make_construction("sym4");
  for (std::uint64_t i = 0; i < 24; ++i)
    CHECK(t_centralizer_count(s4.series, s4.group.element_at(i)) == 0);

  auto a5 = make_construction("alt5");
  CHECK(t_centralizer_count(a5.series, cyc("(1 2 3)", 5)) == 1);
  CHECK_THROWS_AS(t_centralizer_count(a5.series, cyc("(1 2)", 5)), std::invalid_argument);

  // an element acting inside one factor only still fails to centralize
  auto inner = embed_in_block(cyc("(1 2 3)", 5), 0, 2);
  CHECK(t_centralizer_count(sw.series, inner) == 1);
}

TEST_CASE("density bound")
{
  auto eta = eta_exact(5, {500000, 1}).eta;

  auto a5 = make_construction("alt5");
  auto r = crucial_bound_check(a5.series, cyc("(1 2 3 4 5)", 5), eta, cached());
  CHECK(r.t == 1);
  CHECK(r.eta_tilde == std::min(eta, Rational(53, 90)));
  CHECK(r.bound == 1 - r.eta_tilde);
  CHECK(r.holds);
  CHECK(r.solubilizer.t_bound_used == 1);

  auto trivial = crucial_bound_check(a5.series, Permutation(5), eta, cached());
  CHECK(trivial.t == 0);
  CHECK(trivial.bound == 1);
  CHECK(trivial.holds);
}
