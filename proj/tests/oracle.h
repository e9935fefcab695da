#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here works on explicit element sets, so it is slow and limited to small
// degrees, but it shares no code with the library's BSGS machinery.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<unsigned>;

inline Perm identity(std::size_t n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// x^(pq) = (x^p)^q
inline Perm mul(Perm const &p, Perm const &q)
{
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[x] = q[p[x]];
  return r;
}

inline Perm inv(Perm const &p)
{
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[p[x]] = static_cast<unsigned>(x);
  return r;
}

inline Perm comm(Perm const &a, Perm const &b)
{
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

using Set = std::set<Perm>;

// Closure of a generating set by breadth-first multiplication.
inline Set closure(std::vector<Perm> const &gens, std::size_t n)
{
  Set seen{identity(n)};
  std::deque<Perm> queue{identity(n)};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      Perm y = mul(x, g);
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return seen;
}

// Subgroup generated by all commutators of elements of H.
inline Set derived(Set const &h, std::size_t n)
{
  std::set<Perm> comms;
  for (auto const &a : h)
    for (auto const &b : h)
      comms.insert(comm(a, b));
  return closure(std::vector<Perm>(comms.begin(), comms.end()), n);
}

inline std::vector<std::size_t> derived_orders(Set h, std::size_t n)
{
  std::vector<std::size_t> orders{h.size()};
  while (h.size() > 1) {
    Set next = derived(h, n);
    orders.push_back(next.size());
    if (next.size() == h.size())
      break;
    h = std::move(next);
  }
  return orders;
}

inline bool soluble(std::vector<Perm> const &gens, std::size_t n)
{
  return derived_orders(closure(gens, n), n).back() == 1;
}

// Solubility of generated subgroups, memoized on the element set. Small
// symmetric groups have few subgroups, so repeated scans stay cheap.
class SolubilityMemo {
public:
  explicit SolubilityMemo(std::size_t n) : n_(n) {}

  struct Verdict {
    bool soluble;
    std::size_t order;
  };

  Verdict operator()(std::vector<Perm> const &gens)
  {
    Set h = closure(gens, n_);
    auto it = memo_.find(h);
    if (it == memo_.end()) {
      bool sol = derived_orders(h, n_).back() == 1;
      it = memo_.emplace(std::move(h), sol).first;
    }
    return {it->second, it->first.size()};
  }

private:
  std::size_t n_;
  std::map<Set, bool> memo_;
};

inline std::uint64_t fact(unsigned n)
{
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline bool is_even(Perm const &p)
{
  std::vector<bool> seen(p.size());
  std::size_t transpositions = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

inline std::vector<Perm> all_perms(std::size_t n)
{
  std::vector<Perm> out;
  Perm p = identity(n);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline unsigned gcd(unsigned a, unsigned b) { return std::gcd(a, b); }

inline unsigned phi(unsigned m)
{
  unsigned c = 0;
  for (unsigned i = 1; i <= m; ++i)
    c += std::gcd(i, m) == 1;
  return c;
}

} // namespace oracle
