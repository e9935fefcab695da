#pragma once

/**
 * @file field.h
 * @brief Small finite fields F_q (q <= 81) and the semilinear affine maps
 *        x -> x^(p^e) a + b that make up AGammaL(1, q).
 *
 * Elements are stored as integer codes sum c_i p^i of their coefficient
 * vectors modulo a fixed monic irreducible polynomial.
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace solab {

using FqElement = std::uint32_t;

struct PrimePower {
  unsigned p;
  unsigned t;
};

/// p and t with q = p^t, or nullopt.
std::optional<PrimePower> prime_power(unsigned q);

/// Coefficients c_0..c_t of the least monic irreducible of degree t over F_p
/// (least by code sum c_i p^i). Throws unless q is a prime power <= 81.
std::vector<unsigned> irreducible_polynomial(unsigned q);

class FiniteField {
public:
  /// Throws std::invalid_argument unless q is a prime power <= 81.
  explicit FiniteField(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned t() const { return t_; }
  std::vector<unsigned> const &modulus() const { return modulus_; }

  FqElement add(FqElement x, FqElement y) const { return add_[x * q_ + y]; }
  FqElement mul(FqElement x, FqElement y) const { return mul_[x * q_ + y]; }
  FqElement neg(FqElement x) const { return neg_[x]; }
  FqElement sub(FqElement x, FqElement y) const { return add(x, neg(y)); }
  FqElement inv(FqElement x) const; // throws for 0
  FqElement pow(FqElement x, std::uint64_t e) const;
  /// x^(p^e)
  FqElement frobenius(FqElement x, unsigned e) const { return frob_[(e % t_) * q_ + x]; }

  static constexpr FqElement zero = 0;
  static constexpr FqElement one = 1;

private:
  unsigned q_, p_, t_;
  std::vector<unsigned> modulus_;
  std::vector<FqElement> add_, mul_, neg_, frob_;
};

/// x -> x^(p^frob) * mult + shift
struct SemilinearMap {
  unsigned frob = 0;
  FqElement mult = 1;
  FqElement shift = 0;

  bool is_identity() const { return frob == 0 && mult == 1 && shift == 0; }
  bool operator==(SemilinearMap const &) const = default;
};

FqElement apply(FiniteField const &f, SemilinearMap const &g, FqElement x);

/// g1 then g2.
SemilinearMap compose(FiniteField const &f, SemilinearMap const &g1, SemilinearMap const &g2);

/// All q(q-1)t elements of AGammaL(1, q), identity first.
std::vector<SemilinearMap> agammal_elements(FiniteField const &f);

/// Number of x in F_q with g(x) = x, by evaluation.
unsigned agammal_fixed_points(FiniteField const &f, SemilinearMap const &g);

struct FpaglResult {
  unsigned q = 0;
  unsigned max_fix = 0;         // over nontrivial elements of AGammaL(1, q)
  unsigned max_fix_affine = 0;  // over nontrivial elements with frob = 0
  double sqrt_q = 0;
  bool pass = false;            // max_fix^2 <= q and max_fix_affine <= 1
  SemilinearMap witness;        // an element attaining max_fix
};

/// Throws std::invalid_argument unless q is a prime power <= 81.
FpaglResult fpagl_check(unsigned q);

} // namespace solab
