#include "solab/combinatorics.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "solab/numbertheory.h"
#include "solab/parallel.h"

namespace solab {

namespace {

using Images = std::vector<Point>;

constexpr std::uint64_t rank_chunk = 5040;

unsigned resolve(unsigned workers)
{
  return workers ? workers : default_workers();
}

std::uint64_t factorial_u64(std::size_t n)
{
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

// Permutation of lexicographic rank `rank` among all orderings of 0..n-1.
Images unrank(std::size_t n, std::uint64_t rank)
{
  Images pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  Images out;
  for (std::size_t i = n; i > 0; --i) {
    std::uint64_t f = factorial_u64(i - 1);
    auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

// Folds body(images, acc) over Sym(n), chunked by lexicographic rank.
template <typename T, typename Body>
std::vector<T> over_sym(std::size_t n, unsigned workers, Body body)
{
  if (n > exhaustive_ceiling)
    throw std::invalid_argument("degree " + std::to_string(n) +
                                " exceeds the exhaustive ceiling " +
                                std::to_string(exhaustive_ceiling));
  return parallel_chunks<T>(factorial_u64(n), rank_chunk, resolve(workers),
                            [&](std::uint64_t begin, std::uint64_t end) {
                              T acc{};
                              Images p = unrank(n, begin);
                              for (std::uint64_t r = begin; r < end; ++r) {
                                body(p, acc);
                                std::next_permutation(p.begin(), p.end());
                              }
                              return acc;
                            });
}

std::size_t cycle_count(Images const &p)
{
  std::vector<bool> seen(p.size());
  std::size_t cycles = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x])
      continue;
    ++cycles;
    for (Point y = static_cast<Point>(x); !seen[y]; y = p[y])
      seen[y] = true;
  }
  return cycles;
}

bool odd(Images const &p)
{
  return (p.size() - cycle_count(p)) % 2 == 1;
}

// True iff some cycle of p lies inside the point mask.
bool cycle_inside(Images const &p, std::uint32_t mask)
{
  std::uint32_t seen = 0;
  for (Point x = 0; x < p.size(); ++x) {
    if (!(mask >> x & 1) || (seen >> x & 1))
      continue;
    bool inside = true;
    Point y = x;
    do {
      seen |= 1u << y;
      inside = inside && (mask >> y & 1);
      y = p[y];
    } while (y != x);
    if (inside)
      return true;
  }
  return false;
}

std::uint32_t to_mask(std::span<Point const> points, std::size_t n, char const *name)
{
  std::uint32_t mask = 0;
  for (Point x : points) {
    if (x >= n)
      throw std::invalid_argument(std::string(name) + " contains point " +
                                  std::to_string(x + 1) + " outside the degree");
    mask |= 1u << x;
  }
  return mask;
}

std::size_t popcount(std::uint32_t m)
{
  return static_cast<std::size_t>(__builtin_popcount(m));
}

// Length of the cycle through 0 and the step count from 0 to 1 on it.
struct CycleThroughZero {
  std::size_t length;
  std::optional<std::size_t> steps_to_one;
};

CycleThroughZero cycle_through_zero(std::span<Point const> p)
{
  CycleThroughZero c{0, std::nullopt};
  Point x = 0;
  do {
    if (x == 1)
      c.steps_to_one = c.length;
    ++c.length;
    x = p[x];
  } while (x != 0);
  return c;
}

bool reaches_one_coprime(CycleThroughZero const &c)
{
  return c.steps_to_one && std::gcd(*c.steps_to_one, c.length) == 1;
}

// Union-find transitivity test on a generating set plus one extra element.
bool transitive_with(std::span<Permutation const> gens, Images const &extra)
{
  std::size_t n = extra.size();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](Point x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = n;
  auto unite = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --classes;
    }
  };
  for (auto const &g : gens)
    for (Point x = 0; x < n; ++x)
      unite(x, g[x]);
  for (Point x = 0; x < n; ++x)
    unite(x, extra[x]);
  return classes == 1;
}

void check_generators(std::span<Permutation const> gens, std::size_t n)
{
  for (auto const &g : gens) {
    if (g.degree() != n)
      throw std::invalid_argument("generator degree does not match");
  }
}

} // namespace

IdentityCheck factorial_identity_check(unsigned n, unsigned a)
{
  if (a >= n)
    throw std::invalid_argument("factorial identity needs 0 <= a < n");
  IdentityCheck c;
  c.lhs = 0;
  for (unsigned x = 0; x <= a; ++x)
    c.lhs += Rational(factorial(n - x - 1), factorial(a - x));
  c.rhs = Rational(factorial(n), factorial(a) * (n - a));
  c.equal = c.lhs == c.rhs;
  return c;
}

IotaCount iota_count(std::size_t omega_size, std::size_t a_size, unsigned workers)
{
  if (a_size > omega_size)
    throw std::invalid_argument("|A| exceeds |Omega|");
  std::uint32_t mask = (1u << a_size) - 1;

  struct Acc {
    std::uint64_t even = 0, odd = 0;
  };
  auto parts = over_sym<Acc>(omega_size, workers, [&](Images const &p, Acc &acc) {
    if (!cycle_inside(p, mask))
      return;
    if (odd(p))
      ++acc.odd;
    else
      ++acc.even;
  });

  IotaCount c;
  c.omega_size = omega_size;
  c.a_size = a_size;
  for (auto const &part : parts) {
    c.even += part.even;
    c.odd += part.odd;
  }
  c.total = c.even + c.odd;
  return c;
}

KappaCount kappa_count(std::size_t n, std::span<Point const> a, std::span<Point const> b,
                       unsigned workers)
{
  std::uint32_t a_mask = to_mask(a, n, "A");
  std::uint32_t b_mask = to_mask(b, n, "B");
  if (b_mask == 0)
    throw std::invalid_argument("B must be nonempty");
  if ((b_mask & ~a_mask) != 0)
    throw std::invalid_argument("B must be a subset of A");
  std::uint32_t rest = a_mask & ~b_mask;

  auto parts = over_sym<std::uint64_t>(n, workers, [&](Images const &p, std::uint64_t &acc) {
    for (Point x = 0; x < n; ++x) {
      if ((b_mask >> x & 1) && !(b_mask >> p[x] & 1))
        return;
    }
    if (rest && cycle_inside(p, rest))
      return;
    ++acc;
  });

  KappaCount k;
  for (auto c : parts)
    k.exhaustive += c;

  auto nb = static_cast<unsigned>(popcount(b_mask));
  auto na = static_cast<unsigned>(popcount(a_mask));
  auto outside = static_cast<unsigned>(n) - nb;
  // (n-b)! (1 - (a-b)/(n-b)) = (n-b)! - (n-b-1)! (a-b); the bracket is 1 when A = B
  BigInt second = na == nb ? factorial(outside)
                           : factorial(outside) - factorial(outside - 1) * (na - nb);
  k.closed_form = factorial(nb) * second;
  return k;
}

Permutation project_pr_R(Permutation const &map, std::span<Point const> r)
{
  std::size_t n = map.degree();
  if (r.empty())
    throw std::invalid_argument("R must be nonempty");
  std::vector<bool> in_r(n);
  for (Point x : r) {
    if (x >= n)
      throw std::invalid_argument("R contains a point outside the degree");
    in_r[x] = true;
  }
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0u);
  for (Point x = 0; x < n; ++x) {
    if (!in_r[x])
      continue;
    Point y = map[x];
    while (!in_r[y])
      y = map[y];
    images[x] = y;
  }
  return Permutation(std::move(images));
}

bool fact1_check(std::size_t omega_size, std::span<Point const> r, unsigned workers)
{
  if (omega_size > 8)
    throw std::invalid_argument("fact1_check is exhaustive up to |Omega| = 8");
  to_mask(r, omega_size, "R");
  std::set<Point> distinct(r.begin(), r.end());
  std::vector<Point> rs(distinct.begin(), distinct.end());

  using Buckets = std::map<Images, std::uint64_t>;
  auto parts = over_sym<Buckets>(omega_size, workers, [&](Images const &p, Buckets &acc) {
    Images key;
    key.reserve(rs.size());
    std::vector<bool> in_r(omega_size);
    for (Point x : rs)
      in_r[x] = true;
    for (Point x : rs) {
      Point y = p[x];
      while (!in_r[y])
        y = p[y];
      key.push_back(y);
    }
    ++acc[key];
  });

  Buckets total;
  for (auto const &part : parts)
    for (auto const &[key, count] : part)
      total[key] += count;

  std::uint64_t expected = factorial_u64(omega_size) / factorial_u64(rs.size());
  if (total.size() != factorial_u64(rs.size()))
    return false;
  return std::all_of(total.begin(), total.end(),
                     [&](auto const &kv) { return kv.second == expected; });
}

bool fact2_check(std::span<Permutation const> g_gens, Permutation const &sigma,
                 std::span<Point const> r)
{
  std::size_t n = sigma.degree();
  check_generators(g_gens, n);
  std::vector<bool> in_r(n);
  for (Point x : r) {
    if (x >= n)
      throw std::invalid_argument("R contains a point outside the degree");
    in_r[x] = true;
  }
  for (auto const &g : g_gens) {
    for (Point x = 0; x < n; ++x) {
      if (!in_r[x] && g[x] != x)
        throw std::invalid_argument("generator " + to_cycle_string(g) +
                                    " moves a point outside R");
    }
  }

  std::vector<Permutation> big(g_gens.begin(), g_gens.end());
  big.push_back(sigma);
  std::set<std::vector<Point>> lhs;
  for (auto const &orbit : orbits(big)) {
    std::vector<Point> met;
    for (Point x : orbit)
      if (in_r[x])
        met.push_back(x);
    if (!met.empty())
      lhs.insert(met);
  }

  std::vector<Permutation> small(g_gens.begin(), g_gens.end());
  small.push_back(project_pr_R(sigma, r));
  std::set<std::vector<Point>> rhs;
  for (auto const &orbit : orbits(small)) {
    if (in_r[orbit.front()])
      rhs.insert(orbit);
  }
  return lhs == rhs;
}

FacileCount facile_count(std::size_t n, std::size_t k, unsigned workers)
{
  if (k < 2 || k > n)
    throw std::invalid_argument("facile_count needs 2 <= k <= n");
  if (2 * k < n)
    throw std::invalid_argument("facile_count needs k >= n/2");

  auto parts = over_sym<std::uint64_t>(n, workers, [&](Images const &p, std::uint64_t &acc) {
    auto c = cycle_through_zero(p);
    if (c.length == k && reaches_one_coprime(c))
      ++acc;
  });

  FacileCount f;
  f.n = n;
  f.k = k;
  for (auto c : parts)
    f.exact += c;
  auto nn = static_cast<unsigned>(n);
  auto kk = static_cast<unsigned>(k);
  std::uint64_t phi = totient(k);
  f.closed_form = factorial(nn - 2) * phi;
  f.printed_form = binomial(nn, kk - 2) * factorial(kk - 2) * phi * factorial(nn - kk);
  f.bound = Rational(factorial(nn) * phi, BigInt((n + 2) * k));
  f.matches_closed_form = f.closed_form == f.exact;
  f.meets_bound = Rational(f.exact) >= f.bound;
  return f;
}

bool lambda_member(Permutation const &tau, double delta1, double delta2)
{
  std::size_t n = tau.degree();
  if (n < 2)
    throw std::invalid_argument("lambda_member needs degree >= 2");
  auto c = cycle_through_zero(tau.images());
  double k = static_cast<double>(c.length);
  if (k < delta1 * static_cast<double>(n))
    return false;
  if (static_cast<double>(totient(c.length)) < delta2 * k)
    return false;
  return reaches_one_coprime(c);
}

LambdaRate lambda_rate(std::size_t n, double delta1, double delta2, std::uint64_t samples,
                       std::uint64_t seed, double confidence, unsigned workers)
{
  if (n < 2)
    throw std::invalid_argument("lambda_rate needs n >= 2");
  if (samples == 0)
    throw std::invalid_argument("lambda_rate needs at least one sample");

  LambdaRate out;
  out.n = n;
  out.exact = 0;
  for (std::size_t k = 2; k <= n; ++k) {
    double dk = static_cast<double>(k);
    if (dk >= delta1 * static_cast<double>(n) &&
        static_cast<double>(totient(k)) >= delta2 * dk) {
      ++out.admissible;
      out.exact += Rational(totient(k), BigInt(n * (n - 1)));
    }
  }
  // delta2 * c / (1 + 2/n) with c n admissible lengths
  out.bound = delta2 * static_cast<double>(out.admissible) / static_cast<double>(n + 2);

  auto parts = parallel_chunks<std::uint64_t>(
    samples, 256, resolve(workers), [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t hits = 0;
      Images p(n);
      for (std::uint64_t i = begin; i < end; ++i) {
        SplitMix64 rng(stream_seed(seed, i));
        std::iota(p.begin(), p.end(), 0u);
        std::shuffle(p.begin(), p.end(), rng);
        hits += lambda_member(Permutation(p), delta1, delta2);
      }
      return hits;
    });
  std::uint64_t hits = 0;
  for (auto h : parts)
    hits += h;
  out.estimate = wilson_interval(hits, samples, confidence);
  return out;
}

NontransitivityRate nontransitivity_rate(std::span<Permutation const> g_gens,
                                         Permutation const &rho, std::uint64_t samples,
                                         std::uint64_t seed, double confidence,
                                         unsigned workers)
{
  std::size_t n = rho.degree();
  check_generators(g_gens, n);
  if (std::all_of(g_gens.begin(), g_gens.end(), [](auto const &g) { return g.is_identity(); }))
    throw std::invalid_argument("G must be nontrivial");
  if (samples == 0)
    throw std::invalid_argument("nontransitivity_rate needs at least one sample");

  NontransitivityRate out;
  for (Point x = 0; x < n; ++x) {
    if (std::all_of(g_gens.begin(), g_gens.end(), [&](auto const &g) { return g[x] == x; }))
      ++out.fixed;
  }
  double f = static_cast<double>(out.fixed);
  double nn = static_cast<double>(n);
  out.reference = f / nn + 2 / (nn - f);
  out.slack = 3 / (nn - f);

  bool want_odd = parity(rho) == Parity::odd;
  auto parts = parallel_chunks<std::uint64_t>(
    samples, 256, resolve(workers), [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t hits = 0;
      Images p(n);
      for (std::uint64_t i = begin; i < end; ++i) {
        SplitMix64 rng(stream_seed(seed, i));
        std::iota(p.begin(), p.end(), 0u);
        std::shuffle(p.begin(), p.end(), rng);
        // right multiplication by (0 1) swaps the two cosets bijectively
        if (odd(p) != want_odd)
          std::swap(p[std::find(p.begin(), p.end(), 0u) - p.begin()],
                    p[std::find(p.begin(), p.end(), 1u) - p.begin()]);
        hits += !transitive_with(g_gens, p);
      }
      return hits;
    });
  std::uint64_t hits = 0;
  for (auto h : parts)
    hits += h;
  out.estimate = wilson_interval(hits, samples, confidence);
  if (n <= 8)
    out.exact = nontransitivity_exact(g_gens, rho, workers);
  return out;
}

Rational nontransitivity_exact(std::span<Permutation const> g_gens, Permutation const &rho,
                               unsigned workers)
{
  std::size_t n = rho.degree();
  check_generators(g_gens, n);
  if (n < 2)
    throw std::invalid_argument("nontransitivity_exact needs degree >= 2");
  bool want_odd = parity(rho) == Parity::odd;
  auto parts = over_sym<std::uint64_t>(n, workers, [&](Images const &p, std::uint64_t &acc) {
    if (odd(p) == want_odd && !transitive_with(g_gens, p))
      ++acc;
  });
  std::uint64_t hits = 0;
  for (auto h : parts)
    hits += h;
  return Rational(hits, factorial_u64(n) / 2);
}

} // namespace solab
