#pragma once

#include <vector>

#include "expdio/arith.hpp"
#include "expdio/types.hpp"

namespace expdio {

// A triple from the conjectured list of equations with more than one
// solution, canonicalized so that a <= b, with its known solutions.
struct KnownTriple {
  BigInt a;
  BigInt b;
  BigInt c;
  std::vector<Solution> solutions;  // sorted by (z, x, y)
  bool family = false;              // member of (2, 2^n - 1, 2^n + 1)
};

/// The sixteen sporadic triples.
const std::vector<KnownTriple>& sporadic_triples();

/// (2, 2^n - 1, 2^n + 1) with solutions (1,1,1) and (n+2,2,2), n >= 2.
KnownTriple family_member(unsigned long n);

}  // namespace expdio
