#include "doctest.h"

#include <random>

#include "solab/analysis.h"
#include "solab/constructions.h"
#include "solab/insolubility.h"
#include "solab/wreath.h"
#include "support.h"

using namespace solab;

namespace {

struct NaiveCounts {
  std::uint64_t insoluble = 0;
  std::uint64_t contains_alt = 0;
};

// Every y in b*Alt(n), tested with the element-set oracle.
NaiveCounts naive_pins(oracle::Perm const &a, oracle::Perm const &b, std::size_t n,
                       oracle::SolubilityMemo &memo)
{
  NaiveCounts c;
  std::uint64_t half = oracle::fact(static_cast<unsigned>(n)) / 2;
  for (auto const &s : oracle::all_perms(n)) {
    if (!oracle::is_even(s))
      continue;
    auto v = memo({a, oracle::mul(b, s)});
    c.insoluble += !v.soluble;
    c.contains_alt += v.order >= half;
  }
  return c;
}

ExactOptions serial() { return {500000, 1}; }

} // namespace

TEST_CASE("pins_exact matches the naive oracle on Alt(5)")
{
  oracle::SolubilityMemo memo(5);
  auto a = cyc("(1 2)(3 4)", 5);
  auto report = pins_exact(a, CosetSpec::alternating(5, Parity::even), serial());
  auto naive = naive_pins(to_oracle(a), oracle::identity(5), 5, memo);
  CHECK(report.population == 60);
  CHECK(report.count_insoluble == naive.insoluble);
  CHECK(report.p_ins == Rational(naive.insoluble, 60));
  CHECK(report.count_contains_socle == naive.contains_alt);
  REQUIRE(report.q_value);
  CHECK(*report.q_value > 0);
  CHECK(report.p_ins >= *report.q_value);
  CHECK(report.witnesses.size() == 3);
  for (auto const &s : report.witnesses) {
    std::vector<Permutation> gens{a, s};
    CHECK_FALSE(soluble(gens));
  }
}

TEST_CASE("eta(5) matches the no-reduction oracle")
{
  oracle::SolubilityMemo memo(5);
  Rational naive_min = 2;
  auto all = oracle::all_perms(5);
  for (auto const &a : all) {
    if (a == oracle::identity(5))
      continue;
    for (auto const &b : {oracle::identity(5), to_oracle(cyc("(1 2)", 5))}) {
      auto c = naive_pins(a, b, 5, memo);
      naive_min = std::min(naive_min, Rational(c.insoluble, 60));
      CHECK(c.contains_alt > 0);
    }
  }

  auto eta = eta_exact(5, serial());
  CHECK(eta.eta == naive_min);
  CHECK(eta.eta > 0);
  CHECK(eta.table.size() == 12);
  CHECK_FALSE(eta.argmin.empty());
  for (auto const &row : eta.table) {
    CHECK(row.p_ins >= row.q_value);
    CHECK(row.q_value > 0);
  }
  CHECK(eta_exact(5, serial()).eta == eta.eta);
  CHECK(eta.flags.empty());
}

TEST_CASE("eta range and flags")
{
  CHECK_THROWS_AS(eta_exact(4), std::invalid_argument);
  CHECK_THROWS_AS(eta_exact(9), std::invalid_argument);
  auto e6 = eta_exact(6, serial());
  CHECK(e6.eta > 0);
  CHECK(e6.flags == std::vector<std::string>{"aut_restricted_to_sym6"});
}

TEST_CASE("pins_exact argument checks")
{
  auto even = CosetSpec::alternating(5, Parity::even);
  CHECK_THROWS_AS(pins_exact(Permutation(5), even), std::invalid_argument);
  CHECK_THROWS_AS(pins_exact(cyc("(1 2)", 6), even), std::invalid_argument);
  CHECK_THROWS_AS(pins_exact(cyc("(1 2)", 5), even, {10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CosetSpec(alternating_group(5), alternating_group(5), cyc("(1 2)", 5)),
                  std::invalid_argument);
}

TEST_CASE("P_ins depends only on the coset")
{
  auto s5 = symmetric_group(5);
  auto a5 = alternating_group(5);
  auto a = cyc("(1 2 3)", 5);
  for (auto rep0 : {Permutation(5), cyc("(1 2)", 5)}) {
    auto base = pins_exact(a, CosetSpec(s5, a5, rep0), serial()).p_ins;
    for (std::uint64_t i = 0; i < 60; ++i) {
      auto rep = rep0 * a5.element_at(i);
      CHECK(pins_exact(a, CosetSpec(s5, a5, rep), serial()).p_ins == base);
    }
  }
  auto s6 = symmetric_group(6);
  auto a6 = alternating_group(6);
  std::mt19937_64 rng(1);
  auto b = cyc("(1 2)", 6);
  auto a6e = cyc("(1 2 3 4)(5 6)", 6);
  auto base = pins_exact(a6e, CosetSpec(s6, a6, b), serial()).p_ins;
  for (int i = 0; i < 4; ++i) {
    auto rep = b * a6.random_element(rng);
    CHECK(pins_exact(a6e, CosetSpec(s6, a6, rep), serial()).p_ins == base);
  }
}

TEST_CASE("P_ins is conjugation invariant")
{
  std::mt19937_64 rng(17);
  for (std::size_t n : {5u, 6u}) {
    auto sym = symmetric_group(n);
    auto alt = alternating_group(n);
    for (int i = 0; i < 3; ++i) {
      auto a = sym.random_element(rng);
      if (a.is_identity())
        continue;
      auto b = sym.random_element(rng);
      auto g = sym.random_element(rng);
      auto lhs = pins_exact(a, CosetSpec(sym, alt, b), serial()).p_ins;
      auto rhs = pins_exact(a.conjugate(g), CosetSpec(sym, alt, b.conjugate(g)), serial()).p_ins;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("insoluble witnesses shrink under powers")
{
  auto alt = alternating_group(5);
  auto b = cyc("(1 2)", 5);
  for (auto a : {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3 4)", 5), cyc("(1 2 3)(4 5)", 5)}) {
    for (long long r = 2; r < static_cast<long long>(a.order()); ++r) {
      auto ar = a.pow(r);
      if (ar.is_identity())
        continue;
      for (std::uint64_t i = 0; i < 60; ++i) {
        auto y = b * alt.element_at(i);
        std::vector<Permutation> g1{a, y}, gr{ar, y};
        if (!soluble(gr))
          CHECK_FALSE(soluble(g1));
      }
    }
  }
}

TEST_CASE("Monte Carlo is reproducible and independent of workers")
{
  auto a = cyc("(1 2 3 4 5)", 5);
  auto coset = CosetSpec::alternating(5, Parity::odd);
  auto r1 = pins_montecarlo(a, coset, {500, 42, 0.95, 1});
  auto r2 = pins_montecarlo(a, coset, {500, 42, 0.95, 3});
  CHECK(r1.count_insoluble == r2.count_insoluble);
  CHECK(r1.count_contains_socle == r2.count_contains_socle);
  CHECK(r1.witnesses == r2.witnesses);
  auto r3 = pins_montecarlo(a, coset, {500, 43, 0.95, 1});
  CHECK(r3.samples == 500);
  CHECK_THROWS_AS(pins_montecarlo(a, coset, {99, 1, 0.95, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pins_montecarlo(Permutation(5), coset, {500, 1, 0.95, 1}),
                  std::invalid_argument);
}

TEST_CASE("Monte Carlo intervals cover the exact value")
{
  for (std::size_t n : {5u, 6u}) {
    auto a = n == 5 ? cyc("(1 2)(3 4)", 5) : cyc("(1 2 3)", 6);
    auto coset = CosetSpec::alternating(n, Parity::odd);
    double exact = to_double(pins_exact(a, coset, serial()).p_ins);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto r = pins_montecarlo(a, coset, {1000, seed, 0.95, 1});
      covered += r.p_ins_estimate.low <= exact && exact <= r.p_ins_estimate.high;
    }
    CHECK(covered >= 93);
  }
}

TEST_CASE("Monte Carlo half width at n = 20")
{
  auto a = Permutation::from_cycles(20, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15,
                                          16, 17, 18, 19}});
  auto r = pins_montecarlo(a, CosetSpec::alternating(20, Parity::even), {10000, 5, 0.95, 1});
  CHECK(r.p_ins_estimate.half_width <= 0.02);
  REQUIRE(r.q_estimate);
  CHECK(r.q_estimate->estimate <= r.p_ins_estimate.estimate);
}

TEST_CASE("two-coset generation matches the pair oracle")
{
  oracle::SolubilityMemo memo(5);
  std::vector<oracle::Perm> alt;
  for (auto const &s : oracle::all_perms(5))
    if (oracle::is_even(s))
      alt.push_back(s);
  for (auto x : {Permutation(5), cyc("(1 2)", 5)}) {
    auto xo = to_oracle(x);
    std::uint64_t hits = 0;
    for (auto const &s1 : alt)
      for (auto const &s2 : alt)
        hits += memo({oracle::mul(s1, xo), oracle::mul(s2, xo)}).order >= 60;
    auto value = two_coset_generation_check(x, x, 5, 1);
    CHECK(value == Rational(hits, 3600));
    CHECK(value >= Rational(53, 90));
  }
  CHECK_THROWS_AS(two_coset_generation_check(Permutation(8), Permutation(8), 8),
                  std::invalid_argument);
}

TEST_CASE("wreath elements")
{
  auto w = parse_wreath("(1 2 3);()|(1 2)", 5, 2);
  auto p = w.to_permutation();
  // point (0,x) goes to block 1, point x^c0
  CHECK(p[0] == 5 + 1);
  CHECK(p[5] == 0);
  CHECK(to_string(w) == "(1 2 3);()|(1 2)");
  CHECK_THROWS(parse_wreath("(1 2)|()", 5, 2));
  CHECK_THROWS(parse_wreath("(1 2);()", 5, 2));
  CHECK(WreathElement::base({Permutation(3), Permutation(3)}).is_identity());

  // the imprimitive action preserves the blocks
  for (Point x = 0; x < 10; ++x)
    CHECK(p[x] / 5 == w.top[x / 5]);
}

TEST_CASE("wreath Monte Carlo")
{
  auto alt5 = alternating_group(5);
  auto swap = parse_wreath("();()|(1 2)", 5, 2);
  auto b = parse_wreath("(1 2);(1 2 3)|()", 5, 2);
  SamplingOptions opts{2000, 9, 0.95, 1};
  auto r = wreath_pins_montecarlo(swap, b, alt5, 2, opts);
  auto again = wreath_pins_montecarlo(swap, b, alt5, 2, {2000, 9, 0.95, 2});
  CHECK(r.count_insoluble == again.count_insoluble);
  CHECK(r.witnesses == again.witnesses);
  double eta5 = to_double(eta_exact(5, serial()).eta);
  double floor = std::min(eta5, 53.0 / 90);
  CHECK(r.p_ins_estimate.estimate + 3 * r.p_ins_estimate.half_width >= floor);

  // m = 1 reduces to the plain coset
  auto a1 = parse_wreath("(1 2)(3 4)|()", 5, 1);
  auto b1 = parse_wreath("(1 2)|()", 5, 1);
  auto m1 = wreath_pins_montecarlo(a1, b1, alt5, 1, {3000, 4, 0.95, 1});
  double exact = to_double(
    pins_exact(cyc("(1 2)(3 4)", 5), CosetSpec::alternating(5, Parity::odd), serial()).p_ins);
  CHECK(std::abs(m1.p_ins_estimate.estimate - exact) <= 2 * m1.p_ins_estimate.half_width);

  CHECK_THROWS_AS(wreath_pins_montecarlo(parse_wreath("();()|()", 5, 2), b, alt5, 2, opts),
                  std::invalid_argument);
  auto bad = parse_wreath("(1 2 3 4 5 6);()|()", 6, 2);
  CHECK_THROWS_AS(wreath_pins_montecarlo(swap, bad, alt5, 2, opts), std::invalid_argument);
}
