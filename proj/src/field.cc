#include "solab/field.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace solab {

namespace {

constexpr unsigned max_q = 81;

// Least monic irreducibles by code, for the non-prime q <= 81. Prime fields
// use the polynomial x.
std::map<unsigned, std::vector<unsigned>> const &irreducible_table()
{
  static std::map<unsigned, std::vector<unsigned>> const table{
    {4, {1, 1, 1}},
    {8, {1, 1, 0, 1}},
    {9, {1, 0, 1}},
    {16, {1, 1, 0, 0, 1}},
    {25, {2, 0, 1}},
    {27, {1, 2, 0, 1}},
    {32, {1, 0, 1, 0, 0, 1}},
    {49, {1, 0, 1}},
    {64, {1, 1, 0, 0, 0, 0, 1}},
    {81, {2, 1, 0, 0, 1}},
  };
  return table;
}

PrimePower require_small_prime_power(unsigned q)
{
  auto pp = prime_power(q);
  if (!pp)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (q > max_q)
    throw std::invalid_argument("fields are tabulated up to q = 81, got " + std::to_string(q));
  return *pp;
}

std::vector<unsigned> digits(unsigned code, unsigned p, unsigned t)
{
  std::vector<unsigned> d(t);
  for (unsigned i = 0; i < t; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

unsigned encode(std::vector<unsigned> const &d, unsigned p)
{
  unsigned code = 0;
  for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;)
    code = code * p + d[i];
  return code;
}

} // namespace

std::optional<PrimePower> prime_power(unsigned q)
{
  if (q < 2)
    return std::nullopt;
  unsigned p = 2;
  while (q % p)
    ++p;
  unsigned t = 0;
  while (q % p == 0) {
    q /= p;
    ++t;
  }
  if (q != 1)
    return std::nullopt;
  return PrimePower{p, t};
}

std::vector<unsigned> irreducible_polynomial(unsigned q)
{
  auto pp = require_small_prime_power(q);
  if (pp.t == 1)
    return {0, 1};
  return irreducible_table().at(q);
}

FiniteField::FiniteField(unsigned q) : q_(q)
{
  auto pp = require_small_prime_power(q);
  p_ = pp.p;
  t_ = pp.t;
  modulus_ = irreducible_polynomial(q);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (unsigned x = 0; x < q_; ++x) {
    auto dx = digits(x, p_, t_);
    std::vector<unsigned> dn(t_);
    for (unsigned i = 0; i < t_; ++i)
      dn[i] = (p_ - dx[i]) % p_;
    neg_[x] = encode(dn, p_);

    for (unsigned y = 0; y < q_; ++y) {
      auto dy = digits(y, p_, t_);
      std::vector<unsigned> sum(t_);
      for (unsigned i = 0; i < t_; ++i)
        sum[i] = (dx[i] + dy[i]) % p_;
      add_[x * q_ + y] = encode(sum, p_);

      std::vector<unsigned> prod(2 * t_, 0);
      for (unsigned i = 0; i < t_; ++i)
        for (unsigned j = 0; j < t_; ++j)
          prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
      // reduce with x^t = -(c_0 + ... + c_{t-1} x^{t-1})
      for (unsigned k = 2 * t_ - 1; k >= t_; --k) {
        unsigned c = prod[k];
        if (c == 0)
          continue;
        prod[k] = 0;
        for (unsigned i = 0; i < t_; ++i)
          prod[k - t_ + i] = (prod[k - t_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
      prod.resize(t_);
      mul_[x * q_ + y] = encode(prod, p_);
    }
  }

  frob_.resize(t_ * q_);
  for (unsigned x = 0; x < q_; ++x) {
    FqElement y = x;
    for (unsigned e = 0; e < t_; ++e) {
      frob_[e * q_ + x] = y;
      y = pow(y, p_);
    }
  }
}

FqElement FiniteField::pow(FqElement x, std::uint64_t e) const
{
  FqElement result = one;
  while (e) {
    if (e & 1)
      result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FqElement FiniteField::inv(FqElement x) const
{
  if (x == zero)
    throw std::domain_error("zero has no inverse");
  return pow(x, q_ - 2);
}

FqElement apply(FiniteField const &f, SemilinearMap const &g, FqElement x)
{
  return f.add(f.mul(f.frobenius(x, g.frob), g.mult), g.shift);
}

SemilinearMap compose(FiniteField const &f, SemilinearMap const &g1, SemilinearMap const &g2)
{
  // (x^(p^e1) a1 + b1)^(p^e2) a2 + b2
  SemilinearMap r;
  r.frob = (g1.frob + g2.frob) % f.t();
  r.mult = f.mul(f.frobenius(g1.mult, g2.frob), g2.mult);
  r.shift = f.add(f.mul(f.frobenius(g1.shift, g2.frob), g2.mult), g2.shift);
  return r;
}

std::vector<SemilinearMap> agammal_elements(FiniteField const &f)
{
  std::vector<SemilinearMap> out;
  out.reserve(std::size_t(f.q()) * (f.q() - 1) * f.t());
  for (unsigned e = 0; e < f.t(); ++e)
    for (FqElement a = 1; a < f.q(); ++a)
      for (FqElement b = 0; b < f.q(); ++b)
        out.push_back({e, a, b});
  return out;
}

unsigned agammal_fixed_points(FiniteField const &f, SemilinearMap const &g)
{
  if (g.mult == FiniteField::zero || g.mult >= f.q() || g.shift >= f.q() || g.frob >= f.t())
    throw std::invalid_argument("not an element of AGammaL(1, q)");
  unsigned count = 0;
  for (FqElement x = 0; x < f.q(); ++x)
    count += apply(f, g, x) == x;
  return count;
}

FpaglResult fpagl_check(unsigned q)
{
  FiniteField f(q);
  FpaglResult r;
  r.q = q;
  r.sqrt_q = std::sqrt(static_cast<double>(q));
  for (auto const &g : agammal_elements(f)) {
    if (g.is_identity())
      continue;
    unsigned fix = agammal_fixed_points(f, g);
    if (fix > r.max_fix) {
      r.max_fix = fix;
      r.witness = g;
    }
    if (g.frob == 0)
      r.max_fix_affine = std::max(r.max_fix_affine, fix);
  }
  r.pass = r.max_fix * r.max_fix <= q && r.max_fix_affine <= 1;
  return r;
}

} // namespace solab
