#pragma once

/**
 * @file wreath.h
 * @brief Elements of Aut(S) wr Sym(m) in the imprimitive action on m*d points
 *        and the Monte Carlo estimate of P_ins(S^m, a, b).
 */

#include <cstdint>
#include <vector>

#include "solab/group.h"
#include "solab/insolubility.h"
#include "solab/perm.h"

namespace solab {

/// (c_0, ..., c_{m-1}) top: point (i, x) maps to (i^top, x^{c_i}).
struct WreathElement {
  std::vector<Permutation> components; // each of degree d
  Permutation top;                     // degree m

  std::size_t blocks() const { return top.degree(); }
  std::size_t block_size() const { return components.front().degree(); }

  /// Permutation of {0..m*d-1}; point (i, x) is i*d + x.
  Permutation to_permutation() const;
  bool is_identity() const;

  /// Base-group element (s_0, ..., s_{m-1}) with trivial top.
  static WreathElement base(std::vector<Permutation> components);
};

/// "c_1;c_2;...;c_m|top" with 1-indexed cycle notation, e.g. "();()|(1 2)".
WreathElement parse_wreath(std::string const &text, std::size_t d, std::size_t m);
std::string to_string(WreathElement const &w);

/// Estimates P_ins(S^m, a, b): x uniform in S^m, <a, xb> tested for
/// solubility on m*d points. Components of a and b must normalize S.
InsolubilityReport wreath_pins_montecarlo(WreathElement const &a, WreathElement const &b,
                                          GroupHandle const &socle, std::size_t m,
                                          SamplingOptions const &options);

} // namespace solab
