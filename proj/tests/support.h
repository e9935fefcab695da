#pragma once

#include <vector>

#include "oracle.h"
#include "solab/perm.h"

inline oracle::Perm to_oracle(solab::Permutation const &p)
{
  return {p.images().begin(), p.images().end()};
}

inline std::vector<oracle::Perm> to_oracle(std::vector<solab::Permutation> const &ps)
{
  std::vector<oracle::Perm> out;
  for (auto const &p : ps)
    out.push_back(to_oracle(p));
  return out;
}

inline solab::Permutation from_oracle(oracle::Perm const &p)
{
  return solab::Permutation(std::vector<solab::Point>(p.begin(), p.end()));
}

inline solab::Permutation cyc(char const *text, std::size_t n)
{
  return solab::parse_cycles(text, n);
}
