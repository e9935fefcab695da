#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "solab/perm.h"
#include "support.h"

using namespace solab;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

} // namespace

TEST_CASE("compose acts left to right")
{
  auto p = Permutation::from_cycles(3, {{0, 1}});
  auto q = Permutation::from_cycles(3, {{1, 2}});
  auto r = p * q;
  CHECK(r[0] == 2);
  CHECK(r[2] == 1);
  CHECK(r[1] == 0);
  CHECK(p * Permutation(3) == p);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(p * Permutation(4), std::invalid_argument);
}

TEST_CASE("constructor rejects non-bijections")
{
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), std::invalid_argument);
}

TEST_CASE("invert")
{
  CHECK(invert(Permutation(4)).is_identity());
  auto t = Permutation::from_cycles(5, {{1, 3}});
  CHECK(invert(t) == t);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto p = random_perm(10, rng);
    CHECK(compose(p, invert(p)).is_identity());
  }
}

TEST_CASE("parity")
{
  CHECK(parity(Permutation(5)) == Parity::even);
  CHECK(parity(Permutation::from_cycles(5, {{0, 4}})) == Parity::odd);
  CHECK(parity(Permutation::from_cycles(5, {{0, 1, 2}})) == Parity::even);
}

TEST_CASE("parity is a homomorphism on Sym(5)")
{
  auto all = oracle::all_perms(5);
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      auto p = from_oracle(all[i]);
      auto q = from_oracle(all[j]);
      bool odd = (parity(p) == Parity::odd) != (parity(q) == Parity::odd);
      CHECK((parity(p * q) == Parity::odd) == odd);
      CHECK(is_even(p) == oracle::is_even(all[i]));
    }
  }
}

TEST_CASE("fixed points and cycles")
{
  CHECK(fixed_points(Permutation(4)).size() == 4);
  CHECK(fixed_points(Permutation::from_cycles(4, {{0, 1, 2, 3}})).empty());
  CHECK(fixed_points(Permutation::from_cycles(5, {{0, 1}})) == std::vector<Point>{2, 3, 4});

  auto p = Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}});
  CHECK(cycle_decomposition(p) == std::vector<std::vector<Point>>{{0, 1}, {2, 3, 4}, {5}});
  CHECK(cycle_decomposition(Permutation(3)).size() == 3);
  CHECK(cycle_type(p) == std::vector<std::size_t>{3, 2, 1});

  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto r = random_perm(9, rng);
    std::size_t moved = 0;
    for (auto const &c : cycle_decomposition(r)) {
      if (c.size() > 1)
        moved += c.size();
      for (std::size_t k = 0; k < c.size(); ++k)
        CHECK(r[c[k]] == c[(k + 1) % c.size()]);
    }
    CHECK(fixed_points(r).size() + moved == 9);
  }
}

TEST_CASE("orbits")
{
  std::vector<Permutation> id{Permutation(4)};
  CHECK(orbits(id).size() == 4);
  std::vector<Permutation> cycle{Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  CHECK(orbits(cycle).size() == 1);
  std::vector<Permutation> two{Permutation::from_cycles(5, {{0, 1}}),
                               Permutation::from_cycles(5, {{2, 3}})};
  CHECK(orbits(two) == std::vector<std::vector<Point>>{{0, 1}, {2, 3}, {4}});
  CHECK_THROWS_AS(orbits(std::vector<Permutation>{}), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    std::vector<Permutation> gens{Permutation::from_cycles(8, {{0, 3}}),
                                  Permutation::from_cycles(8, {{1, 5, 6}})};
    gens.push_back(gens[0].conjugate(random_perm(8, rng)));
    for (auto const &orbit : orbits(gens)) {
      std::set<Point> set(orbit.begin(), orbit.end());
      for (auto const &g : gens)
        for (Point x : orbit)
          CHECK(set.count(g[x]) == 1);
    }
  }
}

TEST_CASE("cycle notation round trip")
{
  auto p = parse_cycles("(1 2)(3 4 5)", 6);
  CHECK(p == Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}}));
  CHECK(to_cycle_string(p) == "(1 2)(3 4 5)");
  CHECK(to_cycle_string(Permutation(3)) == "()");
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles(" ( 1,3 ) ", 3) == Permutation::from_cycles(3, {{0, 2}}));
  CHECK_THROWS(parse_cycles("(1 7)", 5));
  CHECK_THROWS(parse_cycles("(1 2", 5));
  CHECK_THROWS(parse_cycles("(1 1)", 5));
}

TEST_CASE("order and power")
{
  auto p = Permutation::from_cycles(7, {{0, 1}, {2, 3, 4}});
  CHECK(p.order() == 6);
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(2) == p * p);
}
